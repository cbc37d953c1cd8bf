# cython: boundscheck=False, wraparound=False, cdivision=False
"""Compiled kernels: RK4 stage integration and the closed-form residual sweep.

Twin of _kernels_py; the arithmetic must stay expression-for-expression
identical so both backends produce bit-identical results (built with
-ffp-contract=off for the same reason).
"""

from libc.math cimport exp, fabs

BACKEND_NAME = "compiled"

OVERFLOW_LIMIT = 1e100

cdef double _OVERFLOW_LIMIT = 1e100


def rk4_stage_path(double mx_eff, double my_eff, double cx, double cy,
                   double x0, double y0, double vx0, double vy0,
                   double dt, long n_steps):
    """Classical fixed-step RK4 for the decoupled 2-DOF stage equations.

    See _kernels_py.rk4_stage_path for the contract.
    """
    cdef double x = x0
    cdef double y = y0
    cdef double vx = vx0
    cdef double vy = vy0
    cdef double k1vx, k1vy, s2vx, s2vy, k2vx, k2vy
    cdef double s3vx, s3vy, k3vx, k3vy, s4vx, s4vy, k4vx, k4vy
    cdef long i
    xs = [x]
    ys = [y]
    vxs = [vx]
    vys = [vy]
    for i in range(n_steps):
        k1vx = (cx - vx) / mx_eff
        k1vy = (cy - vy) / my_eff
        s2vx = vx + 0.5 * dt * k1vx
        s2vy = vy + 0.5 * dt * k1vy
        k2vx = (cx - s2vx) / mx_eff
        k2vy = (cy - s2vy) / my_eff
        s3vx = vx + 0.5 * dt * k2vx
        s3vy = vy + 0.5 * dt * k2vy
        k3vx = (cx - s3vx) / mx_eff
        k3vy = (cy - s3vy) / my_eff
        s4vx = vx + dt * k3vx
        s4vy = vy + dt * k3vy
        k4vx = (cx - s4vx) / mx_eff
        k4vy = (cy - s4vy) / my_eff
        x = x + dt * (vx + 2.0 * s2vx + 2.0 * s3vx + s4vx) / 6.0
        y = y + dt * (vy + 2.0 * s2vy + 2.0 * s3vy + s4vy) / 6.0
        vx = vx + dt * (k1vx + 2.0 * k2vx + 2.0 * k3vx + k4vx) / 6.0
        vy = vy + dt * (k1vy + 2.0 * k2vy + 2.0 * k3vy + k4vy) / 6.0
        if (fabs(x) > _OVERFLOW_LIMIT or fabs(y) > _OVERFLOW_LIMIT
                or fabs(vx) > _OVERFLOW_LIMIT or fabs(vy) > _OVERFLOW_LIMIT):
            raise OverflowError(
                f"state exceeded {_OVERFLOW_LIMIT:g} after {len(xs)} steps"
            )
        xs.append(x)
        ys.append(y)
        vxs.append(vx)
        vys.append(vy)
    return xs, ys, vxs, vys


def homogeneous_residual_maxnorm(double mx_eff, double my_eff,
                                 double vx0, double vy0,
                                 double t0, double t1, long n):
    """Max-norm equation-of-motion residual of the zero-input closed form.

    See _kernels_py.homogeneous_residual_maxnorm for the contract.
    """
    cdef double h = (t1 - t0) / (n - 1) if n > 1 else 0.0
    cdef double worst = 0.0
    cdef double t, ex, ey, ax, ay, rx, ry
    cdef long i
    for i in range(n):
        t = t0 + i * h
        ex = exp(-t / mx_eff)
        ey = exp(-t / my_eff)
        ax = -(vx0 / mx_eff) * ex
        ay = -(vy0 / my_eff) * ey
        rx = mx_eff * ax + vx0 * ex
        ry = my_eff * ay + vy0 * ey
        rx = fabs(rx)
        ry = fabs(ry)
        if rx > worst:
            worst = rx
        if ry > worst:
            worst = ry
    return worst
