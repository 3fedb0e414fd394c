"""Pure-Python rewrite kernel over integer-coded words.

Symbol codes: 0 is the zero symbol, ``1 + s`` is plain s, ``1 + n + s`` is
barred s.  Rule codes double as priorities (lower fires first at equal
position).  ``regsem._kernel`` is a compiled drop-in replacement.
"""

R12, R13, R14, R11P, R11B, R15, R16, R21, R22, R23, R24 = range(11)
NRULES = 11
WIDTH = (2, 2, 2, 2, 2, 3, 3, 2, 2, 2, 2)


class StaleRedex(ValueError):
    pass


class Kernel:
    def __init__(self, n, zero, mul, leqL, leqR, rrep, lrep, b3, br, bl):
        self.n = n
        self.zero = zero
        self.mul = list(mul)
        self.leqL = list(leqL)
        self.leqR = list(leqR)
        self.rrep = list(rrep)
        self.lrep = list(lrep)
        self.b3 = list(b3)
        self.br = list(br)
        self.bl = list(bl)

    def plain(self, e):
        return 0 if e == self.zero else 1 + e

    def bar(self, e):
        return 0 if e == self.zero else 1 + self.n + e

    # --- redex detection -------------------------------------------------

    def _pair(self, x, y):
        if x == 0 or y == 0:
            return R12
        n = self.n
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

    def _triple(self, x, y, z):
        if x == 0 or y == 0 or z == 0:
            return -1
        n = self.n
        if x <= n:
            if y <= n or z > n:
                return -1
            u, v, w = x - 1, y - 1 - n, z - 1
            if self.leqL[u * n + v] and self.leqR[w * n + v]:
                return R15
            return -1
        if y > n or z <= n:
            return -1
        u, v, w = x - 1 - n, y - 1, z - 1 - n
        if self.leqR[u * n + v] and self.leqL[w * n + v]:
            return R16
        return -1

    def _at(self, word, i):
        """Redex rules starting at position i, in priority order."""
        out = []
        k = len(word)
        if i + 1 < k:
            r2 = self._pair(word[i], word[i + 1])
        else:
            r2 = -1
        r3 = self._triple(word[i], word[i + 1], word[i + 2]) if i + 2 < k else -1
        if 0 <= r2 < R15:
            out.append(r2)
        if r3 >= 0:
            out.append(r3)
        if r2 >= R21:
            out.append(r2)
        return out

    def redexes(self, word):
        out = []
        for i in range(len(word) - 1):
            for r in self._at(word, i):
                out.append((i, r))
        return out

    def first_redex(self, word, start=0):
        for i in range(start, len(word) - 1):
            rules = self._at(word, i)
            if rules:
                return (i, rules[0])
        return None

    def is_irreducible(self, word):
        return self.first_redex(word) is None

    # --- application -----------------------------------------------------

    def _rhs(self, word, i, rule):
        n = self.n
        x = word[i]
        y = word[i + 1]
        if rule == R12 or rule == R13 or rule == R14:
            return (0,)
        if rule == R11P:
            return (self.plain(self.mul[(x - 1) * n + (y - 1)]),)
        if rule == R11B:
            return (self.bar(self.mul[(y - 1 - n) * n + (x - 1 - n)]),)
        if rule == R15:
            u, v, w = x - 1, y - 1 - n, word[i + 2] - 1
            return (self.plain(self.b3[(u * n + v) * n + w]),)
        if rule == R16:
            u, v, w = x - 1 - n, y - 1, word[i + 2] - 1 - n
            return (self.bar(self.b3[(w * n + v) * n + u]),)
        if rule == R21:
            s, t = x - 1, y - 1 - n
            return (1 + self.rrep[s], 1 + n + self.br[s * n + t])
        if rule == R22:
            s, t = x - 1 - n, y - 1
            return (1 + n + self.lrep[s], 1 + self.bl[t * n + s])
        if rule == R23:
            t, s = x - 1 - n, y - 1
            return (1 + n + self.bl[t * n + s], 1 + self.lrep[s])
        # R24
        t, s = x - 1, y - 1 - n
        return (1 + self.br[s * n + t], 1 + n + self.rrep[s])

    def apply(self, word, pos, rule):
        word = tuple(word)
        if pos < 0 or pos + WIDTH[rule] > len(word) or rule not in self._at(word, pos):
            raise StaleRedex(f"rule {rule} does not apply at position {pos}")
        return word[:pos] + self._rhs(word, pos, rule) + word[pos + WIDTH[rule]:]

    def successors(self, word):
        word = tuple(word)
        out = []
        for i, r in self.redexes(word):
            out.append((i, r, word[:i] + self._rhs(word, i, r) + word[i + WIDTH[r]:]))
        return out

    # --- reduction -------------------------------------------------------

    def normal_form(self, word, cap):
        """Leftmost-priority reduction; returns (word, steps), steps == -1
        when the cap was hit."""
        w = tuple(word)
        steps = 0
        start = 0
        while True:
            hit = self.first_redex(w, start)
            if hit is None:
                return w, steps
            if steps >= cap:
                return w, -1
            i, r = hit
            w = w[:i] + self._rhs(w, i, r) + w[i + WIDTH[r]:]
            steps += 1
            start = i - 2 if i >= 2 else 0
