# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``: identical interface, C complex math."""

from libc.math cimport sqrt

cdef extern from "complex.h" nogil:
    double complex csqrt(double complex)
    double complex clog(double complex)
    double complex cexp(double complex)
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)

BACKEND = "cython"

cdef double complex _W = -0.5 + 0.8660254037844386467637231707529362j
cdef double complex _W2 = -0.5 - 0.8660254037844386467637231707529362j


cdef inline void _unpack9(object m, double complex* e) except *:
    cdef int i
    for i in range(9):
        e[i] = m[i]


cdef inline double complex _det3(double complex* m) nogil:
    return (m[0] * (m[4] * m[8] - m[5] * m[7])
            - m[1] * (m[3] * m[8] - m[5] * m[6])
            + m[2] * (m[3] * m[7] - m[4] * m[6]))


def det3(m):
    cdef double complex e[9]
    _unpack9(m, e)
    return complex(_det3(e))


cdef inline void _adj3(double complex* m, double complex* a) nogil:
    a[0] = m[4] * m[8] - m[5] * m[7]
    a[1] = m[2] * m[7] - m[1] * m[8]
    a[2] = m[1] * m[5] - m[2] * m[4]
    a[3] = m[5] * m[6] - m[3] * m[8]
    a[4] = m[0] * m[8] - m[2] * m[6]
    a[5] = m[2] * m[3] - m[0] * m[5]
    a[6] = m[3] * m[7] - m[4] * m[6]
    a[7] = m[1] * m[6] - m[0] * m[7]
    a[8] = m[0] * m[4] - m[1] * m[3]


def adj3(m):
    cdef double complex e[9]
    cdef double complex a[9]
    _unpack9(m, e)
    _adj3(e, a)
    return (complex(a[0]), complex(a[1]), complex(a[2]),
            complex(a[3]), complex(a[4]), complex(a[5]),
            complex(a[6]), complex(a[7]), complex(a[8]))


def matmul3(x, y):
    cdef double complex a[9]
    cdef double complex b[9]
    cdef double complex c[9]
    cdef int i, j, k
    _unpack9(x, a)
    _unpack9(y, b)
    for i in range(3):
        for j in range(3):
            c[3 * i + j] = (a[3 * i] * b[j]
                            + a[3 * i + 1] * b[3 + j]
                            + a[3 * i + 2] * b[6 + j])
    return (complex(c[0]), complex(c[1]), complex(c[2]),
            complex(c[3]), complex(c[4]), complex(c[5]),
            complex(c[6]), complex(c[7]), complex(c[8]))


def matvec3(m, v):
    cdef double complex e[9]
    cdef double complex w[3]
    _unpack9(m, e)
    w[0] = v[0]
    w[1] = v[1]
    w[2] = v[2]
    return (complex(e[0] * w[0] + e[1] * w[1] + e[2] * w[2]),
            complex(e[3] * w[0] + e[4] * w[1] + e[5] * w[2]),
            complex(e[6] * w[0] + e[7] * w[1] + e[8] * w[2]))


cdef inline double _frob3(double complex* m) nogil:
    cdef double s = 0.0
    cdef int i
    for i in range(9):
        s += creal(m[i]) * creal(m[i]) + cimag(m[i]) * cimag(m[i])
    return sqrt(s)


def frob3(m):
    cdef double complex e[9]
    _unpack9(m, e)
    return _frob3(e)


def char_poly3(m):
    cdef double complex e[9]
    _unpack9(m, e)
    cdef double complex tr = e[0] + e[4] + e[8]
    cdef double complex minors = (e[0] * e[4] - e[1] * e[3]
                                  + e[0] * e[8] - e[2] * e[6]
                                  + e[4] * e[8] - e[5] * e[7])
    return (complex(-tr), complex(minors), complex(-_det3(e)))


cdef inline double complex _cbrt(double complex z) nogil:
    if z == 0:
        return 0
    return cexp(clog(z) / 3.0)


def solve_cubic_raw(c3_in, c2_in, c1_in, c0_in):
    cdef double complex c3 = c3_in
    cdef double complex c2 = c2_in
    cdef double complex c1 = c1_in
    cdef double complex c0 = c0_in
    cdef double complex a = c2 / c3
    cdef double complex b = c1 / c3
    cdef double complex c = c0 / c3
    cdef double complex shift = a / 3.0
    cdef double complex p = b - a * a / 3.0
    cdef double complex q = (2.0 * a * a * a - 9.0 * a * b) / 27.0 + c

    cdef double complex s = csqrt(0.25 * q * q + p * p * p / 27.0)
    cdef double complex u3 = -0.5 * q + s
    cdef double complex alt = -0.5 * q - s
    if cabs(alt) > cabs(u3):
        u3 = alt

    cdef double complex ys[3]
    cdef double complex u, v
    if u3 == 0:
        ys[0] = 0
        ys[1] = 0
        ys[2] = 0
    else:
        u = _cbrt(u3)
        v = -p / (3.0 * u)
        ys[0] = u + v
        ys[1] = u * _W + v * _W2
        ys[2] = u * _W2 + v * _W

    cdef double complex roots[3]
    cdef double complex x, fx, fp, xn, fn
    cdef int i, j
    for i in range(3):
        x = ys[i] - shift
        fx = ((c3 * x + c2) * x + c1) * x + c0
        for j in range(2):
            fp = (3.0 * c3 * x + 2.0 * c2) * x + c1
            if fp == 0:
                break
            xn = x - fx / fp
            fn = ((c3 * xn + c2) * xn + c1) * xn + c0
            if cabs(fn) < cabs(fx):
                x = xn
                fx = fn
            else:
                break
        roots[i] = x

    # insertion sort on (re, im)
    cdef double complex tmp
    for i in range(1, 3):
        tmp = roots[i]
        j = i
        while j > 0 and (creal(roots[j - 1]) > creal(tmp)
                         or (creal(roots[j - 1]) == creal(tmp)
                             and cimag(roots[j - 1]) > cimag(tmp))):
            roots[j] = roots[j - 1]
            j -= 1
        roots[j] = tmp
    return (complex(roots[0]), complex(roots[1]), complex(roots[2]))


def kernel_vector3(m):
    cdef double complex e[9]
    cdef double complex adj[9]
    _unpack9(m, e)
    cdef double f = _frob3(e)
    if f == 0.0:
        return (0j, 0j, 0j), 0.0, 0.0, 0.0
    _adj3(e, adj)
    cdef double dm = cabs(_det3(e)) / (f * f * f)
    cdef double max_minor = 0.0
    cdef double az
    cdef int i, j
    for i in range(9):
        az = cabs(adj[i])
        if az > max_minor:
            max_minor = az
    cdef double mm = max_minor / (f * f)

    cdef int best = 0
    cdef double best_n2 = -1.0
    cdef double n2
    for j in range(3):
        n2 = (creal(adj[j]) ** 2 + cimag(adj[j]) ** 2
              + creal(adj[3 + j]) ** 2 + cimag(adj[3 + j]) ** 2
              + creal(adj[6 + j]) ** 2 + cimag(adj[6 + j]) ** 2)
        if n2 > best_n2:
            best = j
            best_n2 = n2
    if best_n2 <= 0.0:
        return (0j, 0j, 0j), 1.0, dm, mm
    cdef double inv_n = 1.0 / sqrt(best_n2)
    cdef double complex v0 = adj[best] * inv_n
    cdef double complex v1 = adj[3 + best] * inv_n
    cdef double complex v2 = adj[6 + best] * inv_n
    cdef double complex mv0 = e[0] * v0 + e[1] * v1 + e[2] * v2
    cdef double complex mv1 = e[3] * v0 + e[4] * v1 + e[5] * v2
    cdef double complex mv2 = e[6] * v0 + e[7] * v1 + e[8] * v2
    cdef double residual = sqrt(cabs(mv0) ** 2 + cabs(mv1) ** 2
                                + cabs(mv2) ** 2) / f
    return (complex(v0), complex(v1), complex(v2)), residual, dm, mm


def eval_curve9(c, lam_in, mu_in, nu_in):
    cdef double complex k[9]
    cdef int i
    for i in range(9):
        k[i] = c[i]
    cdef double complex lam = lam_in
    cdef double complex mu = mu_in
    cdef double complex nu = nu_in
    return complex(lam * lam * lam
                   + k[0] * mu * mu * mu
                   + k[1] * nu * nu * nu
                   + k[2] * lam * lam * mu
                   + k[3] * lam * mu * mu
                   + k[4] * lam * lam * nu
                   + k[5] * lam * nu * nu
                   + k[6] * mu * mu * nu
                   + k[7] * mu * nu * nu
                   + k[8] * lam * mu * nu)
