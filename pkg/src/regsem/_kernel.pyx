# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rewrite kernel; same interface as regsem._kernel_py."""
from cpython.array cimport array
from libc.stdlib cimport malloc, free

cdef enum:
    R12 = 0
    R13 = 1
    R14 = 2
    R11P = 3
    R11B = 4
    R15 = 5
    R16 = 6
    R21 = 7
    R22 = 8
    R23 = 9
    R24 = 10

NRULES = 11
WIDTH = (2, 2, 2, 2, 2, 3, 3, 2, 2, 2, 2)

from regsem._kernel_py import StaleRedex


cdef inline int _width(int rule) nogil:
    return 3 if rule == R15 or rule == R16 else 2


cdef class Kernel:
    cdef readonly int n
    cdef readonly object zero
    cdef int zero_idx
    cdef int[::1] mul
    cdef int[::1] leqL
    cdef int[::1] leqR
    cdef int[::1] rrep
    cdef int[::1] lrep
    cdef int[::1] b3
    cdef int[::1] br
    cdef int[::1] bl

    def __init__(self, n, zero, mul, leqL, leqR, rrep, lrep, b3, br, bl):
        self.n = n
        self.zero = zero
        self.zero_idx = -1 if zero is None else zero
        self.mul = array("i", [int(x) for x in mul])
        self.leqL = array("i", [int(x) for x in leqL])
        self.leqR = array("i", [int(x) for x in leqR])
        self.rrep = array("i", [int(x) for x in rrep])
        self.lrep = array("i", [int(x) for x in lrep])
        self.b3 = array("i", [int(x) for x in b3])
        self.br = array("i", [int(x) for x in br])
        self.bl = array("i", [int(x) for x in bl])

    cpdef int plain(self, int e):
        return 0 if e == self.zero_idx else 1 + e

    cpdef int bar(self, int e):
        return 0 if e == self.zero_idx else 1 + self.n + e

    cdef int _pair(self, int x, int y) nogil:
        cdef int n = self.n, s, t, le, ge
        if x == 0 or y == 0:
            return R12
        if x <= n:
            s = x - 1
            if y <= n:
                return R11P
            t = y - 1 - n
            le = self.leqL[s * n + t]
            ge = self.leqL[t * n + s]
            if not le and not ge:
                return R13
            if ge and not le:
                return R21 if self.rrep[s] != s else -1
            return R24 if self.rrep[t] != t else -1
        s = x - 1 - n
        if y > n:
            return R11B
        t = y - 1
        le = self.leqR[s * n + t]
        ge = self.leqR[t * n + s]
        if not le and not ge:
            return R14
        if ge and not le:
            return R22 if self.lrep[s] != s else -1
        return R23 if self.lrep[t] != t else -1

    cdef int _triple(self, int x, int y, int z) nogil:
        cdef int n = self.n, u, v, w
        if x == 0 or y == 0 or z == 0:
            return -1
        if x <= n:
            if y <= n or z > n:
                return -1
            u = x - 1
            v = y - 1 - n
            w = z - 1
            if self.leqL[u * n + v] and self.leqR[w * n + v]:
                return R15
            return -1
        if y > n or z <= n:
            return -1
        u = x - 1 - n
        v = y - 1
        w = z - 1 - n
        if self.leqR[u * n + v] and self.leqL[w * n + v]:
            return R16
        return -1

    cdef int _at(self, int* word, int k, int i, int* out) nogil:
        cdef int cnt = 0, r2 = -1, r3 = -1
        if i + 1 < k:
            r2 = self._pair(word[i], word[i + 1])
        if i + 2 < k:
            r3 = self._triple(word[i], word[i + 1], word[i + 2])
        if r2 >= 0 and r2 < R15:
            out[cnt] = r2
            cnt += 1
        if r3 >= 0:
            out[cnt] = r3
            cnt += 1
        if r2 >= R21:
            out[cnt] = r2
            cnt += 1
        return cnt

    cdef int _rhs(self, int* word, int i, int rule, int* out) nogil:
        """Write the right-hand side into out; return its length."""
        cdef int n = self.n, x = word[i], y = word[i + 1], s, t, u, v, w, e
        if rule == R12 or rule == R13 or rule == R14:
            out[0] = 0
            return 1
        if rule == R11P:
            e = self.mul[(x - 1) * n + (y - 1)]
            out[0] = 0 if e == self.zero_idx else 1 + e
            return 1
        if rule == R11B:
            e = self.mul[(y - 1 - n) * n + (x - 1 - n)]
            out[0] = 0 if e == self.zero_idx else 1 + n + e
            return 1
        if rule == R15:
            u = x - 1
            v = y - 1 - n
            w = word[i + 2] - 1
            e = self.b3[(u * n + v) * n + w]
            out[0] = 0 if e == self.zero_idx else 1 + e
            return 1
        if rule == R16:
            u = x - 1 - n
            v = y - 1
            w = word[i + 2] - 1 - n
            e = self.b3[(w * n + v) * n + u]
            out[0] = 0 if e == self.zero_idx else 1 + n + e
            return 1
        if rule == R21:
            s = x - 1
            t = y - 1 - n
            out[0] = 1 + self.rrep[s]
            out[1] = 1 + n + self.br[s * n + t]
            return 2
        if rule == R22:
            s = x - 1 - n
            t = y - 1
            out[0] = 1 + n + self.lrep[s]
            out[1] = 1 + self.bl[t * n + s]
            return 2
        if rule == R23:
            t = x - 1 - n
            s = y - 1
            out[0] = 1 + n + self.bl[t * n + s]
            out[1] = 1 + self.lrep[s]
            return 2
        t = x - 1
        s = y - 1 - n
        out[0] = 1 + self.br[s * n + t]
        out[1] = 1 + n + self.rrep[s]
        return 2

    cdef int* _load(self, word, int* k) except NULL:
        cdef int m = len(word), j
        cdef int* buf = <int*>malloc((m + 2) * sizeof(int))
        if buf == NULL:
            raise MemoryError()
        for j in range(m):
            buf[j] = word[j]
        k[0] = m
        return buf

    def redexes(self, word):
        cdef int k, i, c, j
        cdef int rules[3]
        cdef int* buf = self._load(word, &k)
        out = []
        try:
            for i in range(k - 1):
                c = self._at(buf, k, i, rules)
                for j in range(c):
                    out.append((i, rules[j]))
        finally:
            free(buf)
        return out

    def first_redex(self, word, int start=0):
        cdef int k, i, c
        cdef int rules[3]
        cdef int* buf = self._load(word, &k)
        try:
            for i in range(start, k - 1):
                c = self._at(buf, k, i, rules)
                if c:
                    return (i, rules[0])
        finally:
            free(buf)
        return None

    def is_irreducible(self, word):
        return self.first_redex(word) is None

    def apply(self, word, int pos, int rule):
        cdef int k, c, j, m
        cdef int rules[3]
        cdef int rhs[2]
        cdef int* buf
        word = tuple(word)
        if rule < 0 or rule > R24 or pos < 0 or pos + _width(rule) > len(word):
            raise StaleRedex(f"rule {rule} does not apply at position {pos}")
        buf = self._load(word, &k)
        try:
            c = self._at(buf, k, pos, rules)
            for j in range(c):
                if rules[j] == rule:
                    break
            else:
                raise StaleRedex(f"rule {rule} does not apply at position {pos}")
            m = self._rhs(buf, pos, rule, rhs)
            if m == 1:
                mid = (rhs[0],)
            else:
                mid = (rhs[0], rhs[1])
        finally:
            free(buf)
        return word[:pos] + mid + word[pos + _width(rule):]

    def successors(self, word):
        cdef int k, i, c, j, m, r
        cdef int rules[3]
        cdef int rhs[2]
        word = tuple(word)
        cdef int* buf = self._load(word, &k)
        out = []
        try:
            for i in range(k - 1):
                c = self._at(buf, k, i, rules)
                for j in range(c):
                    r = rules[j]
                    m = self._rhs(buf, i, r, rhs)
                    if m == 1:
                        mid = (rhs[0],)
                    else:
                        mid = (rhs[0], rhs[1])
                    out.append((i, r, word[:i] + mid + word[i + _width(r):]))
        finally:
            free(buf)
        return out

    def normal_form(self, word, long cap):
        cdef int k, i, c, m, r, wdt, j, start = 0, found
        cdef long steps = 0
        cdef int rules[3]
        cdef int rhs[2]
        cdef int* buf = self._load(word, &k)
        try:
            while True:
                found = 0
                for i in range(start, k - 1):
                    c = self._at(buf, k, i, rules)
                    if c:
                        found = 1
                        break
                if not found:
                    break
                if steps >= cap:
                    steps = -1
                    break
                r = rules[0]
                wdt = _width(r)
                m = self._rhs(buf, i, r, rhs)
                if m < wdt:
                    for j in range(i + m, k - wdt + m):
                        buf[j] = buf[j + wdt - m]
                    k -= wdt - m
                for j in range(m):
                    buf[i + j] = rhs[j]
                steps += 1
                start = i - 2 if i >= 2 else 0
            result = [0] * k
            for j in range(k):
                result[j] = buf[j]
            result = tuple(result)
        finally:
            free(buf)
        return result, steps
