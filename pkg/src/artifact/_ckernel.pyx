# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled free-group kernels; same contract as ``_pykernel``."""

from libc.stdlib cimport malloc, realloc, free


cdef struct Buf:
    int *data
    Py_ssize_t size
    Py_ssize_t cap


cdef int buf_init(Buf *b, Py_ssize_t cap) except -1:
    if cap < 16:
        cap = 16
    b.data = <int *> malloc(cap * sizeof(int))
    if b.data == NULL:
        raise MemoryError()
    b.size = 0
    b.cap = cap
    return 0


cdef inline int buf_push(Buf *b, int x) except -1:
    cdef int *grown
    if b.size > 0 and b.data[b.size - 1] == -x:
        b.size -= 1
        return 0
    if b.size == b.cap:
        grown = <int *> realloc(b.data, 2 * b.cap * sizeof(int))
        if grown == NULL:
            raise MemoryError()
        b.data = grown
        b.cap *= 2
    b.data[b.size] = x
    b.size += 1
    return 0


cdef tuple to_tuple(Buf *b):
    cdef list out = [None] * b.size
    cdef Py_ssize_t i
    for i in range(b.size):
        out[i] = b.data[i]
    return tuple(out)


cdef int load(Buf *b, object word) except -1:
    cdef object x
    buf_init(b, len(word) * 2)
    for x in word:
        buf_push(b, <int> x)
    return 0


cdef int act_into(Buf *out, Buf *src, int k) except -1:
    cdef int a = k if k > 0 else -k
    cdef int bb = a + 1
    cdef Py_ssize_t i
    cdef int x
    out.size = 0
    if k > 0:
        for i in range(src.size):
            x = src.data[i]
            if x == a:
                buf_push(out, a); buf_push(out, bb); buf_push(out, -a)
            elif x == -a:
                buf_push(out, a); buf_push(out, -bb); buf_push(out, -a)
            elif x == bb:
                buf_push(out, a)
            elif x == -bb:
                buf_push(out, -a)
            else:
                buf_push(out, x)
    else:
        for i in range(src.size):
            x = src.data[i]
            if x == a:
                buf_push(out, bb)
            elif x == -a:
                buf_push(out, -bb)
            elif x == bb:
                buf_push(out, -bb); buf_push(out, a); buf_push(out, bb)
            elif x == -bb:
                buf_push(out, -bb); buf_push(out, -a); buf_push(out, bb)
            else:
                buf_push(out, x)
    return 0


def reduce(word):
    cdef Buf b
    load(&b, word)
    try:
        return to_tuple(&b)
    finally:
        free(b.data)


def inverse(word):
    return tuple([-x for x in reversed(word)])


def concat(a, b):
    cdef Buf buf
    cdef object x
    load(&buf, a)
    try:
        for x in b:
            buf_push(&buf, <int> x)
        return to_tuple(&buf)
    finally:
        free(buf.data)


def act_letter(word, int k):
    return act_word(word, (k,))


def act_word(word, letters):
    cdef Buf cur, nxt, tmp
    cdef int k
    cdef object obj
    load(&cur, word)
    try:
        buf_init(&nxt, cur.cap)
    except MemoryError:
        free(cur.data)
        raise
    try:
        for obj in letters:
            k = <int> obj
            act_into(&nxt, &cur, k)
            tmp = cur
            cur = nxt
            nxt = tmp
        return to_tuple(&cur)
    finally:
        free(cur.data)
        free(nxt.data)


def signature(int n, letters):
    cdef list seq = list(letters)
    return tuple([act_word((j,), seq) for j in range(1, n + 1)])


def substitute(word, images):
    cdef Buf out
    cdef object x, img
    cdef Py_ssize_t i
    cdef int v
    buf_init(&out, 64)
    try:
        for x in word:
            v = <int> x
            if v > 0:
                img = images[v - 1]
                for i in range(len(img)):
                    buf_push(&out, <int> img[i])
            else:
                img = images[-v - 1]
                for i in range(len(img) - 1, -1, -1):
                    buf_push(&out, -(<int> img[i]))
        return to_tuple(&out)
    finally:
        free(out.data)


def signature_capped(int n, letters, Py_ssize_t cap):
    """Like ``signature`` but returns None once any image exceeds ``cap``."""
    cdef list seq = [<int> x for x in letters]
    cdef list images = []
    cdef Buf cur, nxt, tmp
    cdef int j, k
    cdef bint over
    for j in range(1, n + 1):
        buf_init(&cur, 16)
        buf_push(&cur, j)
        try:
            buf_init(&nxt, 16)
        except MemoryError:
            free(cur.data)
            raise
        over = False
        try:
            for k in seq:
                act_into(&nxt, &cur, k)
                tmp = cur
                cur = nxt
                nxt = tmp
                if cur.size > cap:
                    over = True
                    break
            if over:
                return None
            images.append(to_tuple(&cur))
        finally:
            free(cur.data)
            free(nxt.data)
    return tuple(images)
