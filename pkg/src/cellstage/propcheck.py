"""Randomized numerical checks of every verified relation in the model.

Each registered property draws pseudo-random inputs from a SampleDomain,
evaluates a relation both through the library and through an independent
route (a raw scalar formula, a closed-form oracle, or an exact identity),
and reports the worst normalized violation seen. Checks are deterministic:
the generator is the documented SplitMix64 scheme in `_rng`, with one
decorrelated stream per property id, so results are independent of check
order and of any concurrency.

Report wire format (one report per line, fixed field order):

    id status samples max_violation tolerance seed

with floats rendered to 17 significant digits. A failing report is followed
by one extra line:

    counterexample sample_index=<i> <name>=<value> ...

listing every drawn input of the worst sample, in draw order, enough to
replay the evaluation by hand.

Violations are normalized so "pass" is scale-free: algebraic identities
divide the absolute deviation by the natural magnitude of the computation
(documented per property below), residual checks follow their stated
absolute or wrench-relative form. Tolerances are per-property constants;
the `unstable_tolerance_overrides` field of SampleDomain can replace them
but is explicitly unstable and not part of the report contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import dynamics, frames
from ._rng import SplitMix64, property_stream
from .errors import DomainError, UnknownPropertyError
from .linalg2 import Mat2, Vec2, determinant, inverse2, mat_mul, mat_vec_mul

DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 42

#: Points of the [0, 10] residual grid each THM4_HOMOG_SOLUTION draw sweeps.
_THM4_GRID_POINTS = 101
_THM4_T_MAX = 10.0

#: Central-difference step for the derivative-consistency check.
_FD_STEP = 1e-4

#: Steps taken per integrator-accuracy draw.
_INTEGRATOR_STEPS = 1000

#: Error floor below which a convergence ratio is numerically unresolvable.
_ORDER_FLOOR = 1e-11


@dataclass(frozen=True)
class SampleDomain:
    """Sampling ranges for every free quantity, as (low, high) pairs.

    Angles and signed quantities are sampled uniformly; scale-like
    quantities (fx, fy, masses) log-uniformly to exercise conditioning.
    Displacements are uniform on the half-open (0, high]. Lower bounds
    respect the constructors' positivity constraints by construction, so no
    draw can violate a type invariant.

    unstable_tolerance_overrides: (property_id, tolerance) pairs consulted
    by check_theorem. UNSTABLE expert knob; overridden runs are not
    comparable across versions.
    """

    alpha: tuple[float, float] = (-math.pi, math.pi)
    displacement: tuple[float, float] = (0.0, 10.0)
    resolution: tuple[float, float] = (0.1, 100.0)
    mass: tuple[float, float] = (1e-3, 10.0)
    position: tuple[float, float] = (-100.0, 100.0)
    velocity: tuple[float, float] = (-100.0, 100.0)
    wrench: tuple[float, float] = (-10.0, 10.0)
    unstable_tolerance_overrides: tuple[tuple[str, float], ...] = ()


DEFAULT_DOMAIN = SampleDomain()


@dataclass(frozen=True)
class PropertyReport:
    """Result of one property check. status is 'pass' iff
    max_violation <= tolerance; counterexample is present iff 'fail'."""

    property_id: str
    samples: int
    max_violation: float
    tolerance: float
    status: str
    seed: int
    counterexample: tuple[tuple[str, float], ...] | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _fmt(value) -> str:
    if isinstance(value, int):
        return str(value)
    return f"{value:.17g}"


def format_report(report: PropertyReport) -> str:
    """Render a report in the documented line format."""
    line = (
        f"{report.property_id} {report.status} {report.samples} "
        f"{report.max_violation:.17g} {report.tolerance:.17g} {report.seed}"
    )
    if report.counterexample is not None:
        pairs = " ".join(f"{k}={_fmt(v)}" for k, v in report.counterexample)
        line += f"\ncounterexample {pairs}"
    return line


# ---------------------------------------------------------------------------
# samplers

def sample_calibration(rng: SplitMix64, dom: SampleDomain) -> frames.Calibration:
    """Draw order: alpha, dx, dy, fx, fy."""
    return frames.Calibration(
        alpha=rng.uniform(*dom.alpha),
        dx=rng.uniform_open_low(dom.displacement[1]),
        dy=rng.uniform_open_low(dom.displacement[1]),
        fx=rng.log_uniform(*dom.resolution),
        fy=rng.log_uniform(*dom.resolution),
    )


def sample_masses(rng: SplitMix64, dom: SampleDomain) -> dynamics.MassParams:
    """Draw order: mx, my, mp (each log-uniform)."""
    return dynamics.MassParams(
        mx=rng.log_uniform(*dom.mass),
        my=rng.log_uniform(*dom.mass),
        mp=rng.log_uniform(*dom.mass),
    )


def sample_stage_point(rng: SplitMix64, dom: SampleDomain) -> frames.StagePoint:
    return frames.StagePoint(rng.uniform(*dom.position), rng.uniform(*dom.position))


def sample_initial_state(rng: SplitMix64, dom: SampleDomain) -> dynamics.StageState:
    """Draw order: x0, y0, xd0, yd0; t pinned to 0."""
    return dynamics.StageState(
        t=0.0,
        x=rng.uniform(*dom.position),
        y=rng.uniform(*dom.position),
        xdot=rng.uniform(*dom.velocity),
        ydot=rng.uniform(*dom.velocity),
    )


def sample_wrench(rng: SplitMix64, dom: SampleDomain) -> dynamics.Wrench:
    """Draw order: taux, tauy, fexd, feyd."""
    return dynamics.Wrench(
        taux=rng.uniform(*dom.wrench),
        tauy=rng.uniform(*dom.wrench),
        fexd=rng.uniform(*dom.wrench),
        feyd=rng.uniform(*dom.wrench),
    )


def _calibration_inputs(c: frames.Calibration) -> dict:
    return {"alpha": c.alpha, "dx": c.dx, "dy": c.dy, "fx": c.fx, "fy": c.fy}


def _mass_inputs(m: dynamics.MassParams) -> dict:
    return {"mx": m.mx, "my": m.my, "mp": m.mp}


def _state_inputs(s: dynamics.StageState) -> dict:
    return {"x0": s.x, "y0": s.y, "xd0": s.xdot, "yd0": s.ydot}


def _wrench_inputs(w: dynamics.Wrench) -> dict:
    return {"taux": w.taux, "tauy": w.tauy, "fexd": w.fexd, "feyd": w.feyd}


# ---------------------------------------------------------------------------
# property evaluators; each returns (violation, inputs)

def _check_camera_stage(rng: SplitMix64, dom: SampleDomain):
    """Library stage_to_camera vs the raw componentwise relation.

    Normalized by the formula's magnitude: |x| + |y| + max(dx, dy).
    """
    c = sample_calibration(rng, dom)
    p = sample_stage_point(rng, dom)
    got = frames.stage_to_camera(p, c)
    ca = math.cos(c.alpha)
    sa = math.sin(c.alpha)
    want_xc = p.x * ca + p.y * sa + c.dx
    want_yc = -p.x * sa + p.y * ca + c.dy
    denom = max(1.0, abs(p.x) + abs(p.y) + max(c.dx, c.dy))
    violation = max(abs(got.xc - want_xc), abs(got.yc - want_yc)) / denom
    return violation, {**_calibration_inputs(c), "x": p.x, "y": p.y}


def _check_image_camera(rng: SplitMix64, dom: SampleDomain):
    """Library camera_to_image vs (fx*xc, fy*yc), normalized by that scale."""
    c = sample_calibration(rng, dom)
    cp = frames.CameraPoint(rng.uniform(*dom.position), rng.uniform(*dom.position))
    got = frames.camera_to_image(cp, c)
    want_u = c.fx * cp.xc
    want_v = c.fy * cp.yc
    denom = max(1.0, abs(want_u), abs(want_v))
    violation = max(abs(got.u - want_u), abs(got.v - want_v)) / denom
    return violation, {**_calibration_inputs(c), "xc": cp.xc, "yc": cp.yc}


def _check_image_stage(rng: SplitMix64, dom: SampleDomain):
    """stage_to_image vs the two-step composition and vs the raw affine form.

    Per-component normalization by fx*(|x|+|y|+dx) resp. fy*(|x|+|y|+dy),
    the magnitude the affine evaluation actually moves through.
    """
    c = sample_calibration(rng, dom)
    p = sample_stage_point(rng, dom)
    direct = frames.stage_to_image(p, c)
    composed = frames.camera_to_image(frames.stage_to_camera(p, c), c)
    ca = math.cos(c.alpha)
    sa = math.sin(c.alpha)
    affine_u = c.fx * ca * p.x + c.fx * sa * p.y + c.fx * c.dx
    affine_v = -c.fy * sa * p.x + c.fy * ca * p.y + c.fy * c.dy
    denom_u = max(1.0, c.fx * (abs(p.x) + abs(p.y) + c.dx))
    denom_v = max(1.0, c.fy * (abs(p.x) + abs(p.y) + c.dy))
    violation = max(
        abs(direct.u - composed.u) / denom_u,
        abs(direct.v - composed.v) / denom_v,
        abs(direct.u - affine_u) / denom_u,
        abs(direct.v - affine_v) / denom_v,
    )
    return violation, {**_calibration_inputs(c), "x": p.x, "y": p.y}


def _check_homogeneous_solution(rng: SplitMix64, dom: SampleDomain):
    """Equation-of-motion residual of the zero-input closed form.

    Sweeps a uniform grid over t in [0, 10], feeding the exact analytic
    velocity and acceleration into dynamics_residual with a zero wrench.
    Absolute max-norm violation.
    """
    m = sample_masses(rng, dom)
    init = sample_initial_state(rng, dom)
    worst = 0.0
    step = _THM4_T_MAX / (_THM4_GRID_POINTS - 1)
    for i in range(_THM4_GRID_POINTS):
        t = i * step
        state = dynamics.analytic_homogeneous_solution(m, init, t)
        accel = dynamics.analytic_homogeneous_acceleration(m, init, t)
        residual = dynamics.dynamics_residual(
            m, accel, Vec2(state.xdot, state.ydot), dynamics.ZERO_WRENCH
        )
        worst = max(worst, residual.inf_norm())
    return worst, {**_mass_inputs(m), **_state_inputs(init)}


def _check_image_dynamics(rng: SplitMix64, dom: SampleDomain):
    """Image-space residual of a transformed zero-residual stage state.

    Builds the stage acceleration axis-by-axis from the equation of motion
    (accel = (net - vel)/m_eff, no matrix code involved), pushes velocity
    and acceleration through T, and requires the image-space residual to
    vanish. Violation normalized by (1 + |wrench|_inf), matching the
    stated wrench-relative bound.
    """
    m = sample_masses(rng, dom)
    c = sample_calibration(rng, dom)
    vel = Vec2(rng.uniform(*dom.velocity), rng.uniform(*dom.velocity))
    w = sample_wrench(rng, dom)
    net = w.net_input()
    accel = Vec2(
        (net.e1 - vel.e1) / m.x_effective,
        (net.e2 - vel.e2) / m.y_effective,
    )
    t_mat = frames.transformation_matrix(c)
    img_vel = mat_vec_mul(t_mat, vel)
    img_accel = mat_vec_mul(t_mat, accel)
    residual = dynamics.image_dynamics_residual(m, c, img_accel, img_vel, w)
    violation = residual.inf_norm() / (1.0 + w.inf_norm())
    return violation, {
        **_mass_inputs(m),
        **_calibration_inputs(c),
        "xdot": vel.e1,
        "ydot": vel.e2,
        **_wrench_inputs(w),
    }


def _check_inverse_identity(rng: SplitMix64, dom: SampleDomain):
    """m . inverse2(m) = I for transformation and mass-scaled matrices.

    Deviation divided by max(1, |m|_inf^2 / |det m|), the conditioning of
    the adjugate formula.
    """
    c = sample_calibration(rng, dom)
    m = sample_masses(rng, dom)
    t_mat = frames.transformation_matrix(c)
    worst = 0.0
    for mat in (t_mat, mat_mul(dynamics.mass_matrix(m), t_mat)):
        inv = inverse2(mat)
        prod = mat_mul(mat, inv)
        dev = max(
            abs(prod.a11 - 1.0), abs(prod.a12), abs(prod.a21), abs(prod.a22 - 1.0)
        )
        denom = max(1.0, mat.inf_norm() ** 2 / abs(determinant(mat)))
        worst = max(worst, dev / denom)
    return worst, {**_calibration_inputs(c), **_mass_inputs(m)}


def _check_det_product(rng: SplitMix64, dom: SampleDomain):
    """det(a.b) = det(a) det(b), relative to max(1, |det a . det b|)."""
    c = sample_calibration(rng, dom)
    m = sample_masses(rng, dom)
    beta = rng.uniform(*dom.alpha)
    a = frames.transformation_matrix(c)
    b = mat_mul(dynamics.mass_matrix(m), frames.rotation_matrix(beta))
    da = determinant(a)
    db = determinant(b)
    dev = abs(determinant(mat_mul(a, b)) - da * db)
    violation = dev / max(1.0, abs(da * db))
    return violation, {**_calibration_inputs(c), **_mass_inputs(m), "beta": beta}


def _check_matvec_linearity(rng: SplitMix64, dom: SampleDomain):
    """m.(s*u + r*v) = s*(m.u) + r*(m.v), normalized by the moved magnitude."""
    c = sample_calibration(rng, dom)
    mat = frames.transformation_matrix(c)
    u = Vec2(rng.uniform(*dom.position), rng.uniform(*dom.position))
    v = Vec2(rng.uniform(*dom.position), rng.uniform(*dom.position))
    s = rng.uniform(*dom.wrench)
    r = rng.uniform(*dom.wrench)
    lhs = mat_vec_mul(mat, u.scaled(s) + v.scaled(r))
    rhs = mat_vec_mul(mat, u).scaled(s) + mat_vec_mul(mat, v).scaled(r)
    denom = max(
        1.0, mat.inf_norm() * (abs(s) * u.inf_norm() + abs(r) * v.inf_norm())
    )
    violation = (lhs - rhs).inf_norm() / denom
    return violation, {
        **_calibration_inputs(c),
        "u1": u.e1,
        "u2": u.e2,
        "v1": v.e1,
        "v2": v.e2,
        "s": s,
        "r": r,
    }


def _check_factorization(rng: SplitMix64, dom: SampleDomain):
    """transformation_matrix = display_resolution_matrix . rotation_matrix."""
    c = sample_calibration(rng, dom)
    direct = frames.transformation_matrix(c)
    factored = mat_mul(
        frames.display_resolution_matrix(c.fx, c.fy), frames.rotation_matrix(c.alpha)
    )
    denom = max(1.0, c.fx, c.fy)
    violation = (
        max(abs(x - y) for x, y in zip(direct, factored)) / denom
    )
    return violation, _calibration_inputs(c)


def _check_det_scale(rng: SplitMix64, dom: SampleDomain):
    """det T = fx*fy up to the trig identity, relative to fx*fy."""
    c = sample_calibration(rng, dom)
    dev = abs(determinant(frames.transformation_matrix(c)) - c.fx * c.fy)
    violation = dev / max(1.0, c.fx * c.fy)
    return violation, _calibration_inputs(c)


def _check_rotation_inverse(rng: SplitMix64, dom: SampleDomain):
    """R(alpha) . R(-alpha) = I, absolute (rotation entries are order 1)."""
    alpha = rng.uniform(*dom.alpha)
    prod = mat_mul(frames.rotation_matrix(alpha), frames.rotation_matrix(-alpha))
    violation = max(
        abs(prod.a11 - 1.0), abs(prod.a12), abs(prod.a21), abs(prod.a22 - 1.0)
    )
    return violation, {"alpha": alpha}


def _check_round_trip(rng: SplitMix64, dom: SampleDomain):
    """image_to_stage(stage_to_image(p)) = p.

    Normalized by the recovered scale |T^-1|_inf * (|T|_inf |p|_inf +
    |offset|_inf), which is what the round trip actually amplifies.
    """
    c = sample_calibration(rng, dom)
    p = sample_stage_point(rng, dom)
    img = frames.stage_to_image(p, c)
    back = frames.image_to_stage(img, c)
    t_mat = frames.transformation_matrix(c)
    t_inv = inverse2(t_mat)
    offset = max(abs(c.fx * c.dx), abs(c.fy * c.dy))
    scale = t_inv.inf_norm() * (t_mat.inf_norm() * p.vec().inf_norm() + offset)
    denom = max(1.0, p.vec().inf_norm(), scale)
    violation = max(abs(back.x - p.x), abs(back.y - p.y)) / denom
    return violation, {**_calibration_inputs(c), "x": p.x, "y": p.y}


def _check_derivative_fd(rng: SplitMix64, dom: SampleDomain):
    """Central difference of analytic position vs analytic velocity.

    h = 1e-4; t drawn from [1, 10], where the O(h^2) truncation bound
    (h^2/6 * max|pos'''| <= 5e-7 for the sampled mass and velocity ranges)
    holds; near t = 0 with near-minimal masses the third derivative alone
    exceeds the tolerance, so smaller times cannot certify anything at
    this step size. Absolute violation.
    """
    m = sample_masses(rng, dom)
    init = sample_initial_state(rng, dom)
    t = rng.uniform(1.0, _THM4_T_MAX)
    state = dynamics.analytic_homogeneous_solution(m, init, t)
    dev_x = finite_difference_check(
        lambda tt: dynamics.analytic_homogeneous_solution(m, init, tt).x,
        t,
        _FD_STEP,
        state.xdot,
    )
    dev_y = finite_difference_check(
        lambda tt: dynamics.analytic_homogeneous_solution(m, init, tt).y,
        t,
        _FD_STEP,
        state.ydot,
    )
    return max(dev_x, dev_y), {**_mass_inputs(m), **_state_inputs(init), "t": t}


def _check_constant_input_reduction(rng: SplitMix64, dom: SampleDomain):
    """Constant-input closed form at w = 0 vs the zero-input closed form.

    The two formulas associate differently, so agreement is to round-off,
    not bitwise; normalized by the solution scale (|pos0| + m_eff*|vel0|
    for positions, |vel0| for velocities).
    """
    m = sample_masses(rng, dom)
    init = sample_initial_state(rng, dom)
    t = rng.uniform(0.0, _THM4_T_MAX)
    a = dynamics.analytic_homogeneous_solution(m, init, t)
    b = dynamics.analytic_constant_input_solution(m, init, dynamics.ZERO_WRENCH, t)
    scale_x = max(1.0, abs(init.x) + m.x_effective * abs(init.xdot))
    scale_y = max(1.0, abs(init.y) + m.y_effective * abs(init.ydot))
    violation = max(
        abs(a.x - b.x) / scale_x,
        abs(a.y - b.y) / scale_y,
        abs(a.xdot - b.xdot) / max(1.0, abs(init.xdot)),
        abs(a.ydot - b.ydot) / max(1.0, abs(init.ydot)),
    )
    return violation, {**_mass_inputs(m), **_state_inputs(init), "t": t}


def _integrator_step(m: dynamics.MassParams) -> float:
    """Step small enough to resolve the fastest axis: min(1e-3, m_min/128)."""
    return min(1e-3, min(m.x_effective, m.y_effective) / 128.0)


def _max_error_vs_analytic(
    m: dynamics.MassParams,
    init: dynamics.StageState,
    w: dynamics.Wrench,
    dt: float,
    n_steps: int,
) -> float:
    traj = dynamics.simulate(m, init, w, dt, (n_steps + 0.5) * dt)
    worst = 0.0
    for state in traj:
        exact = dynamics.analytic_constant_input_solution(m, init, w, state.t)
        worst = max(
            worst,
            abs(state.x - exact.x),
            abs(state.y - exact.y),
            abs(state.xdot - exact.xdot),
            abs(state.ydot - exact.ydot),
        )
    return worst


def _check_integrator_vs_analytic(rng: SplitMix64, dom: SampleDomain):
    """Fixed-step RK4 vs the constant-input closed form, absolute max-norm.

    Per draw: 1000 steps at dt = min(1e-3, m_min/128), so the step always
    resolves the fastest time constant in the sampled mass range.
    """
    m = sample_masses(rng, dom)
    init = sample_initial_state(rng, dom)
    w = sample_wrench(rng, dom)
    dt = _integrator_step(m)
    violation = _max_error_vs_analytic(m, init, w, dt, _INTEGRATOR_STEPS)
    return violation, {
        **_mass_inputs(m),
        **_state_inputs(init),
        **_wrench_inputs(w),
        "dt": dt,
    }


def _check_integrator_order(rng: SplitMix64, dom: SampleDomain):
    """Halving the step must cut the max error vs the closed form >= 8x.

    Runs the zero-input problem at dt = m_min/8 for 64 steps and again at
    dt/2; violation is max(0, 8/ratio - 1), zero exactly when the observed
    ratio certifies fourth order. Draws whose coarse error sits below the
    1e-11 round-off floor cannot resolve a ratio and count as zero.
    """
    m = sample_masses(rng, dom)
    init = sample_initial_state(rng, dom)
    dt = min(m.x_effective, m.y_effective) / 8.0
    err_coarse = _max_error_vs_analytic(m, init, dynamics.ZERO_WRENCH, dt, 64)
    err_fine = _max_error_vs_analytic(m, init, dynamics.ZERO_WRENCH, dt / 2.0, 128)
    inputs = {**_mass_inputs(m), **_state_inputs(init), "dt": dt}
    if err_coarse < _ORDER_FLOOR or err_fine == 0.0:
        return 0.0, inputs
    ratio = err_coarse / err_fine
    return max(0.0, 8.0 / ratio - 1.0), inputs


# ---------------------------------------------------------------------------
# registry and engine

_Evaluator = Callable[[SplitMix64, SampleDomain], tuple[float, dict]]

#: Registry: property id -> (tolerance, evaluator). Order is the report order.
PROPERTIES: dict[str, tuple[float, _Evaluator]] = {
    "THM1_CAMERA_STAGE": (1e-12, _check_camera_stage),
    "THM2_IMAGE_CAMERA": (1e-12, _check_image_camera),
    "THM3_IMAGE_STAGE": (1e-12, _check_image_stage),
    "THM4_HOMOG_SOLUTION": (1e-9, _check_homogeneous_solution),
    "THM5_IMAGE_DYNAMICS": (1e-9, _check_image_dynamics),
    "LINALG_INVERSE_IDENTITY": (1e-12, _check_inverse_identity),
    "LINALG_DET_PRODUCT": (1e-12, _check_det_product),
    "LINALG_MATVEC_LINEARITY": (1e-12, _check_matvec_linearity),
    "FRAMES_FACTORIZATION": (1e-12, _check_factorization),
    "FRAMES_DET_SCALE": (1e-12, _check_det_scale),
    "FRAMES_ROTATION_INVERSE": (1e-12, _check_rotation_inverse),
    "FRAMES_ROUND_TRIP": (1e-12, _check_round_trip),
    "THM4_DERIVATIVE_FD": (5e-7, _check_derivative_fd),
    "THM4_CONSTANT_INPUT_REDUCTION": (1e-15, _check_constant_input_reduction),
    "INTEGRATOR_VS_ANALYTIC": (1e-6, _check_integrator_vs_analytic),
    "INTEGRATOR_ORDER": (0.0, _check_integrator_order),
}


def check_theorem(
    property_id: str,
    domain: SampleDomain = DEFAULT_DOMAIN,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> PropertyReport:
    """Run one registered property over `samples` pseudo-random draws.

    Deterministic in (property_id, domain, samples, seed). Raises
    UnknownPropertyError for an unregistered id and DomainError for
    samples < 1.
    """
    if property_id not in PROPERTIES:
        raise UnknownPropertyError(f"unknown property id {property_id!r}")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples!r}")
    tolerance, evaluator = PROPERTIES[property_id]
    for pid, override in domain.unstable_tolerance_overrides:
        if pid == property_id:
            tolerance = override
    rng = property_stream(seed, property_id)
    max_violation = 0.0
    worst_inputs: dict | None = None
    worst_index = 0
    for index in range(samples):
        violation, inputs = evaluator(rng, domain)
        if violation > max_violation or worst_inputs is None:
            max_violation = violation
            worst_inputs = inputs
            worst_index = index
    if max_violation <= tolerance:
        return PropertyReport(
            property_id, samples, max_violation, tolerance, "pass", seed
        )
    counterexample = (("sample_index", worst_index),) + tuple(
        (key, value) for key, value in worst_inputs.items()
    )
    return PropertyReport(
        property_id, samples, max_violation, tolerance, "fail", seed, counterexample
    )


def run_all(
    domain: SampleDomain = DEFAULT_DOMAIN,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> list[PropertyReport]:
    """Check every registered property, in registry order."""
    return [check_theorem(pid, domain, samples, seed) for pid in PROPERTIES]


def finite_difference_check(
    fn: Callable[[float], float], at: float, h: float, expected_derivative: float
) -> float:
    """|central difference of fn at `at` with step h - expected_derivative|.

    The caller owns the O(h^2) truncation bound; h must be > 0.
    """
    if not h > 0.0:
        raise DomainError(f"h must be positive, got {h!r}")
    central = (fn(at + h) - fn(at - h)) / (2.0 * h)
    return abs(central - expected_derivative)
