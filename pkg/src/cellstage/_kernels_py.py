"""Pure-Python twins of the compiled kernels.

Selected by cellstage._backend when the Cython extension is unavailable.
The arithmetic here must stay expression-for-expression identical to
_kernels.pyx so both backends produce bit-identical trajectories (the
extension is compiled with FP contraction off for the same reason).
"""

from math import exp

BACKEND_NAME = "python"

#: A state component beyond this magnitude means the configuration diverged.
OVERFLOW_LIMIT = 1e100


def rk4_stage_path(mx_eff, my_eff, cx, cy, x0, y0, vx0, vy0, dt, n_steps):
    """Classical fixed-step RK4 for the decoupled 2-DOF stage equations.

    Integrates pos' = vel, vel' = (c - vel)/m_eff per axis for n_steps steps
    of size dt. Returns four lists (x, y, vx, vy) of length n_steps + 1,
    sample 0 being the initial state.

    Raises OverflowError as soon as any component exceeds OVERFLOW_LIMIT.
    """
    x = x0
    y = y0
    vx = vx0
    vy = vy0
    xs = [x]
    ys = [y]
    vxs = [vx]
    vys = [vy]
    for _ in range(n_steps):
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
        if (
            abs(x) > OVERFLOW_LIMIT
            or abs(y) > OVERFLOW_LIMIT
            or abs(vx) > OVERFLOW_LIMIT
            or abs(vy) > OVERFLOW_LIMIT
        ):
            raise OverflowError(
                f"state exceeded {OVERFLOW_LIMIT:g} after {len(xs)} steps"
            )
        xs.append(x)
        ys.append(y)
        vxs.append(vx)
        vys.append(vy)
    return xs, ys, vxs, vys


def homogeneous_residual_maxnorm(mx_eff, my_eff, vx0, vy0, t0, t1, n):
    """Max-norm equation-of-motion residual of the zero-input closed form.

    Evaluates m_eff * accel(t) + vel(t) on an n-point uniform grid over
    [t0, t1], with vel(t) = v0 * exp(-t/m_eff) and accel its exact
    derivative; the analytic solution makes this zero up to round-off.
    Positions never enter the residual. n must be >= 1; n == 1 evaluates
    only t0.
    """
    h = (t1 - t0) / (n - 1) if n > 1 else 0.0
    worst = 0.0
    for i in range(n):
        t = t0 + i * h
        ex = exp(-t / mx_eff)
        ey = exp(-t / my_eff)
        ax = -(vx0 / mx_eff) * ex
        ay = -(vy0 / my_eff) * ey
        rx = mx_eff * ax + vx0 * ex
        ry = my_eff * ay + vy0 * ey
        rx = abs(rx)
        ry = abs(ry)
        if rx > worst:
            worst = rx
        if ry > worst:
            worst = ry
    return worst
