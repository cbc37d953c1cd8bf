"""Calibrated coordinate transforms among stage, camera, and image frames.

The stage frame sits on the positioning table holding the cells, the camera
frame on the microscope optics, the image frame on the pixel plane. A planar
rotation `alpha` plus displacement (dx, dy) maps stage to camera; per-axis
display-resolution scales (fx, fy) map camera to image. All maps here are
pointwise; callers map them over trajectory samples.

The three point types are deliberately distinct so a frame mix-up is a type
error rather than a silent bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .linalg2 import DEFAULT_SINGULAR_EPS, Mat2, Vec2, inverse2, mat_vec_mul, _require_finite


def _require_positive(name: str, value: float) -> None:
    _require_finite(name, value)
    if not value > 0.0:
        raise DomainError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class Calibration:
    """Frame geometry of one rig setup.

    alpha: stage-to-camera rotation, radians (radians only; no degree mode).
    dx, dy: camera-origin displacement in stage-length units, both > 0.
    fx, fy: display resolution in pixels per stage-length unit, both > 0.
    """

    alpha: float
    dx: float
    dy: float
    fx: float
    fy: float

    def __post_init__(self):
        _require_finite("alpha", self.alpha)
        _require_positive("dx", self.dx)
        _require_positive("dy", self.dy)
        _require_positive("fx", self.fx)
        _require_positive("fy", self.fy)


@dataclass(frozen=True)
class StagePoint:
    """A point in the stage frame (stage-length units)."""

    x: float
    y: float

    def __post_init__(self):
        _require_finite("x", self.x)
        _require_finite("y", self.y)

    def vec(self) -> Vec2:
        return Vec2(self.x, self.y)


@dataclass(frozen=True)
class CameraPoint:
    """A point in the camera frame (stage-length units)."""

    xc: float
    yc: float

    def __post_init__(self):
        _require_finite("xc", self.xc)
        _require_finite("yc", self.yc)

    def vec(self) -> Vec2:
        return Vec2(self.xc, self.yc)


@dataclass(frozen=True)
class ImagePoint:
    """A point in the image plane (pixels)."""

    u: float
    v: float

    def __post_init__(self):
        _require_finite("u", self.u)
        _require_finite("v", self.v)

    def vec(self) -> Vec2:
        return Vec2(self.u, self.v)


def rotation_matrix(alpha: float) -> Mat2:
    """[[cos a, sin a], [-sin a, cos a]] -- stage-to-camera rotation."""
    _require_finite("alpha", alpha)
    c = math.cos(alpha)
    s = math.sin(alpha)
    return Mat2(c, s, -s, c)


def displacement_vector(dx: float, dy: float) -> Vec2:
    """Origin displacement between stage and camera frames; both components > 0."""
    _require_positive("dx", dx)
    _require_positive("dy", dy)
    return Vec2(dx, dy)


def display_resolution_matrix(fx: float, fy: float) -> Mat2:
    """diag(fx, fy): camera-frame lengths to pixels; both scales > 0."""
    _require_positive("fx", fx)
    _require_positive("fy", fy)
    return Mat2(fx, 0.0, 0.0, fy)


def transformation_matrix(c: Calibration) -> Mat2:
    """Composite stage-to-image linear part.

    [[fx cos a, fx sin a], [-fy sin a, fy cos a]]; equals
    display_resolution_matrix(fx, fy) . rotation_matrix(alpha), with
    determinant fx*fy.
    """
    ca = math.cos(c.alpha)
    sa = math.sin(c.alpha)
    return Mat2(c.fx * ca, c.fx * sa, -c.fy * sa, c.fy * ca)


def stage_to_camera(p: StagePoint, c: Calibration) -> CameraPoint:
    """R(alpha) . p + (dx, dy)."""
    rotated = mat_vec_mul(rotation_matrix(c.alpha), p.vec())
    shifted = rotated + displacement_vector(c.dx, c.dy)
    return CameraPoint(shifted.e1, shifted.e2)


def camera_to_image(p: CameraPoint, c: Calibration) -> ImagePoint:
    """(u, v) = (fx * xc, fy * yc)."""
    scaled = mat_vec_mul(display_resolution_matrix(c.fx, c.fy), p.vec())
    return ImagePoint(scaled.e1, scaled.e2)


def stage_to_image(p: StagePoint, c: Calibration) -> ImagePoint:
    """T(c) . p + (fx*dx, fy*dy).

    Agrees with camera_to_image(stage_to_camera(p, c), c) to round-off.
    """
    linear = mat_vec_mul(transformation_matrix(c), p.vec())
    mapped = linear + Vec2(c.fx * c.dx, c.fy * c.dy)
    return ImagePoint(mapped.e1, mapped.e2)


def image_to_stage(
    p: ImagePoint, c: Calibration, eps: float = DEFAULT_SINGULAR_EPS
) -> StagePoint:
    """Inverse of stage_to_image: T(c)^-1 . (p - (fx*dx, fy*dy)).

    For a valid Calibration det T = fx*fy > 0, so SingularError can only fire
    on degenerate inputs constructed around the validation.
    """
    t_inv = inverse2(transformation_matrix(c), eps)
    recovered = mat_vec_mul(t_inv, p.vec() - Vec2(c.fx * c.dx, c.fy * c.dy))
    return StagePoint(recovered.e1, recovered.e2)
