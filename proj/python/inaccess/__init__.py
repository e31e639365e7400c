"""Inaccessibility of planar convex domains: chord minima, level sets and maximizers."""

from ._core import (
    Chord,
    ConvexPolygon,
    EllipseSolution,
    Error,
    IsoscelesSolution,
    LevelSet,
    MaxResult,
    NotablePoints,
    Point2,
    RResult,
    SampledConvexDomain,
    bow_point,
    chord_through,
    ellipse_solution,
    inaccessibility,
    inaccessibility_at,
    isosceles_solve,
    isosceles_triangle,
    level_set,
    maximize,
    notable_points,
    oracle_r,
    rectangle_solution,
    run_cli,
    trapezoid_prediction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
