# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernel (same interface as ``_pykernel.Reducer``).

Monomials are packed into one ``uint64`` each: ``64 // nvars`` bits per
field.  Every term carries its total degree; any term whose degree would
exceed the packing limit raises ``OverflowError`` and the caller retries with
the pure-Python kernel.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc, qsort, realloc


cdef struct Term:
    uint64_t K
    uint64_t E
    int64_t c
    int32_t d


cdef struct Poly:
    Term* t
    int n


cdef class Reducer:
    cdef readonly int n
    cdef int64_t p
    cdef int bits
    cdef int32_t maxdeg
    cdef uint64_t mask
    cdef uint64_t guard
    cdef uint64_t* kcol
    cdef Poly* polys
    cdef char* active
    cdef int npolys
    cdef int cap
    cdef Term* buf_a
    cdef Term* buf_b
    cdef Term* rem
    cdef int cap_a
    cdef int cap_b
    cdef int cap_rem
    cdef int nrem
    cdef int* reducers

    compiled = True

    def __cinit__(self, int nvars, weights, p):
        cdef int i, r
        self.kcol = NULL
        self.polys = NULL
        self.active = NULL
        self.buf_a = NULL
        self.buf_b = NULL
        self.rem = NULL
        self.reducers = NULL
        if nvars < 1 or nvars > 16:
            raise ValueError("compiled kernel supports 1..16 variables")
        self.n = nvars
        self.p = p
        self.bits = 64 // nvars
        self.maxdeg = (1 << (self.bits - 1)) - 1
        self.mask = ((<uint64_t>1) << self.bits) - 1 if self.bits < 64 else <uint64_t>(-1)
        self.guard = 0
        for i in range(nvars):
            self.guard |= (<uint64_t>1) << (self.bits * i + self.bits - 1)
        self.kcol = <uint64_t*>malloc(nvars * sizeof(uint64_t))
        nrows = len(weights)
        for i in range(nvars):
            self.kcol[i] = 0
            for r in range(nrows):
                if weights[r][i]:
                    self.kcol[i] += (<uint64_t>weights[r][i]) << (self.bits * (nrows - 1 - r))
        self.cap = 16
        self.npolys = 0
        self.polys = <Poly*>malloc(self.cap * sizeof(Poly))
        self.active = <char*>malloc(self.cap * sizeof(char))
        self.reducers = <int*>malloc(self.cap * sizeof(int))
        self.cap_a = self.cap_b = self.cap_rem = 64
        self.buf_a = <Term*>malloc(self.cap_a * sizeof(Term))
        self.buf_b = <Term*>malloc(self.cap_b * sizeof(Term))
        self.rem = <Term*>malloc(self.cap_rem * sizeof(Term))
        self.nrem = 0

    def __dealloc__(self):
        cdef int i
        if self.polys != NULL:
            for i in range(self.npolys):
                free(self.polys[i].t)
            free(self.polys)
        free(self.kcol)
        free(self.active)
        free(self.reducers)
        free(self.buf_a)
        free(self.buf_b)
        free(self.rem)

    # packing ---------------------------------------------------------------
    cdef Term _pack(self, exps, int64_t c) except *:
        cdef Term t
        cdef int i
        cdef int64_t e
        cdef int32_t d = 0
        t.K = 0
        t.E = 0
        for i in range(self.n):
            e = exps[i]
            d += e
            if e < 0 or d > self.maxdeg:
                raise OverflowError("monomial too large for the compiled kernel")
            t.E |= (<uint64_t>e) << (self.bits * i)
            t.K += (<uint64_t>e) * self.kcol[i]
        t.d = d
        t.c = c
        return t

    cdef tuple _unpack(self, uint64_t E):
        cdef int i
        return tuple([<long>((E >> (self.bits * i)) & self.mask) for i in range(self.n)])

    cdef void _grow_polys(self):
        self.cap *= 2
        self.polys = <Poly*>realloc(self.polys, self.cap * sizeof(Poly))
        self.active = <char*>realloc(self.active, self.cap * sizeof(char))
        self.reducers = <int*>realloc(self.reducers, self.cap * sizeof(int))

    cdef Term* _ensure(self, Term* buf, int* cap, int need):
        if need > cap[0]:
            while cap[0] < need:
                cap[0] *= 2
            buf = <Term*>realloc(buf, cap[0] * sizeof(Term))
        return buf

    cdef int _load(self, terms) except -1:
        """Convert Python terms into buf_a sorted by K descending; returns count."""
        cdef list items = []
        cdef int64_t c
        for exps, coeff in terms:
            c = coeff % self.p
            if c:
                items.append(exps)
                items.append(c)
        cdef int m = len(items) // 2
        cdef int i
        self.buf_a = self._ensure(self.buf_a, &self.cap_a, m + 1)
        for i in range(m):
            self.buf_a[i] = self._pack(items[2 * i], items[2 * i + 1])
        _sort_terms(self.buf_a, m)
        return m

    cdef int _store(self, Term* src, int m):
        cdef int i
        cdef int64_t inv
        cdef Term* t
        if self.npolys == self.cap:
            self._grow_polys()
        t = <Term*>malloc(m * sizeof(Term))
        inv = _inverse(src[0].c, self.p)
        for i in range(m):
            t[i] = src[i]
            t[i].c = (src[i].c * inv) % self.p
        self.polys[self.npolys].t = t
        self.polys[self.npolys].n = m
        self.active[self.npolys] = 1
        self.npolys += 1
        return self.npolys - 1

    # reduction -------------------------------------------------------------
    cdef int _reduce(self, int ncur, int skip) except -1:
        """Reduce buf_a[0:ncur] fully; remainder is left in self.rem[0:self.nrem]."""
        cdef int nred = 0
        cdef int idx, pos, i, j, k, r
        cdef Term t
        cdef Term* cur
        cdef Term* out
        cdef Poly g
        cdef Term lead
        cdef uint64_t dK, dE, K2
        cdef int32_t dd, d2
        cdef int64_t mult, c
        cdef uint64_t guard = self.guard
        cdef int64_t p = self.p
        cdef int found
        for idx in range(self.npolys):
            if self.active[idx] and idx != skip:
                self.reducers[nred] = idx
                nred += 1
        self.nrem = 0
        pos = 0
        while pos < ncur:
            cur = self.buf_a
            t = cur[pos]
            found = -1
            for r in range(nred):
                lead = self.polys[self.reducers[r]].t[0]
                if ((t.E | guard) - lead.E) & guard == guard:
                    found = self.reducers[r]
                    break
            if found < 0:
                self.rem = self._ensure(self.rem, &self.cap_rem, self.nrem + 1)
                self.rem[self.nrem] = t
                self.nrem += 1
                pos += 1
                continue
            g = self.polys[found]
            dK = t.K - lead.K
            dE = t.E - lead.E
            dd = t.d - lead.d
            mult = p - t.c
            self.buf_b = self._ensure(self.buf_b, &self.cap_b, (ncur - pos - 1) + (g.n - 1) + 1)
            out = self.buf_b
            cur = self.buf_a
            i = pos + 1
            j = 1
            k = 0
            while i < ncur and j < g.n:
                K2 = g.t[j].K + dK
                if cur[i].K > K2:
                    out[k] = cur[i]
                    k += 1
                    i += 1
                elif cur[i].K < K2:
                    d2 = g.t[j].d + dd
                    if d2 > self.maxdeg:
                        raise OverflowError("degree overflow in the compiled kernel")
                    out[k].K = K2
                    out[k].E = g.t[j].E + dE
                    out[k].d = d2
                    out[k].c = (mult * g.t[j].c) % p
                    k += 1
                    j += 1
                else:
                    c = (cur[i].c + mult * g.t[j].c) % p
                    if c:
                        out[k] = cur[i]
                        out[k].c = c
                        k += 1
                    i += 1
                    j += 1
            while i < ncur:
                out[k] = cur[i]
                k += 1
                i += 1
            while j < g.n:
                d2 = g.t[j].d + dd
                if d2 > self.maxdeg:
                    raise OverflowError("degree overflow in the compiled kernel")
                out[k].K = g.t[j].K + dK
                out[k].E = g.t[j].E + dE
                out[k].d = d2
                out[k].c = (mult * g.t[j].c) % p
                k += 1
                j += 1
            # swap buffers
            self.buf_b = self.buf_a
            self.buf_a = out
            i = self.cap_a
            self.cap_a = self.cap_b
            self.cap_b = i
            ncur = k
            pos = 0
        return self.nrem

    # public API ------------------------------------------------------------
    def __len__(self):
        return self.npolys

    def add(self, terms):
        cdef int m = self._load(terms)
        if m == 0:
            return -1
        return self._store(self.buf_a, m)

    def add_reduced(self, terms):
        cdef int m = self._load(terms)
        m = self._reduce(m, -1)
        if m == 0:
            return -1
        return self._store(self.rem, m)

    def set_active(self, int i, flag):
        self.active[i] = 1 if flag else 0

    def lm(self, int i):
        return self._unpack(self.polys[i].t[0].E)

    def nterms(self, int i):
        return self.polys[i].n

    def terms(self, int i):
        cdef Poly f = self.polys[i]
        cdef int k
        return [(self._unpack(f.t[k].E), f.t[k].c) for k in range(f.n)]

    def normal_form(self, terms):
        cdef int m = self._load(terms)
        cdef int k
        m = self._reduce(m, -1)
        return [(self._unpack(self.rem[k].E), self.rem[k].c) for k in range(m)]

    def spoly_reduce(self, int i, int j):
        cdef Poly f = self.polys[i]
        cdef Poly g = self.polys[j]
        cdef int k, a, b, m
        cdef uint64_t ef, eg, lf, lg, E, KL
        cdef int32_t dL = 0
        cdef uint64_t dKf, dEf, dKg, dEg, Kf, Kg
        cdef int32_t ddf, ddg
        cdef int64_t c
        cdef Term* out
        # lcm of the leading monomials, field by field
        E = 0
        KL = 0
        for k in range(self.n):
            lf = (f.t[0].E >> (self.bits * k)) & self.mask
            lg = (g.t[0].E >> (self.bits * k)) & self.mask
            if lg > lf:
                lf = lg
            E |= lf << (self.bits * k)
            KL += lf * self.kcol[k]
            dL += <int32_t>lf
        if dL > self.maxdeg:
            raise OverflowError("degree overflow in the compiled kernel")
        dKf = KL - f.t[0].K
        dEf = E - f.t[0].E
        ddf = dL - f.t[0].d
        dKg = KL - g.t[0].K
        dEg = E - g.t[0].E
        ddg = dL - g.t[0].d
        self.buf_a = self._ensure(self.buf_a, &self.cap_a, f.n + g.n)
        out = self.buf_a
        a = 1
        b = 1
        m = 0
        while a < f.n or b < g.n:
            if b >= g.n or (a < f.n and f.t[a].K + dKf > g.t[b].K + dKg):
                out[m].K = f.t[a].K + dKf
                out[m].E = f.t[a].E + dEf
                out[m].d = f.t[a].d + ddf
                out[m].c = f.t[a].c
                a += 1
            elif a >= f.n or f.t[a].K + dKf < g.t[b].K + dKg:
                out[m].K = g.t[b].K + dKg
                out[m].E = g.t[b].E + dEg
                out[m].d = g.t[b].d + ddg
                out[m].c = self.p - g.t[b].c
                b += 1
            else:
                c = (f.t[a].c - g.t[b].c + self.p) % self.p
                a += 1
                b += 1
                if not c:
                    continue
                out[m].K = f.t[a - 1].K + dKf
                out[m].E = f.t[a - 1].E + dEf
                out[m].d = f.t[a - 1].d + ddf
                out[m].c = c
            if out[m].d > self.maxdeg:
                raise OverflowError("degree overflow in the compiled kernel")
            m += 1
        m = self._reduce(m, -1)
        if m == 0:
            return -1
        return self._store(self.rem, m)

    def reduce_tail(self, int i):
        cdef Poly f = self.polys[i]
        cdef int k, m
        cdef Term* t
        self.buf_a = self._ensure(self.buf_a, &self.cap_a, f.n)
        for k in range(1, f.n):
            self.buf_a[k - 1] = f.t[k]
        m = self._reduce(f.n - 1, i)
        t = <Term*>malloc((m + 1) * sizeof(Term))
        t[0] = f.t[0]
        for k in range(m):
            t[k + 1] = self.rem[k]
        free(f.t)
        self.polys[i].t = t
        self.polys[i].n = m + 1


cdef int64_t _inverse(int64_t a, int64_t p):
    # extended Euclid; p is prime and a is nonzero mod p
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int _cmp_desc(const void* a, const void* b) noexcept nogil:
    cdef uint64_t ka = (<Term*>a).K
    cdef uint64_t kb = (<Term*>b).K
    return (ka < kb) - (ka > kb)


cdef void _sort_terms(Term* a, int n):
    qsort(a, n, sizeof(Term), _cmp_desc)
