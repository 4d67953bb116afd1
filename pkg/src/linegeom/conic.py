"""Conics living in a plane of P^3, described in a frame of three points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .errors import RankError
from .linalg import Matrix, adjugate, kernel, matvec, quadratic_from_symmetric, rank, solve, transpose
from .poly import MultiPoly

__all__ = ["ConicInPlane", "plane_frame", "frame_coordinates", "point_from_frame"]


def plane_frame(plane) -> List[list]:
    """Three points spanning the plane (kernel basis of its covector)."""
    basis = kernel([list(plane)])
    if len(basis) != 3:
        raise ValueError("zero covector is not a plane")
    return basis


def point_from_frame(frame, y) -> list:
    return [sum((y[k] * frame[k][i] for k in range(3)), Fraction(0)) for i in range(4)]


def frame_coordinates(frame, X) -> list:
    """Coordinates ``y`` with ``X = sum y_k frame[k]``; X must lie in the plane."""
    return solve(transpose(frame), list(X))


@dataclass(frozen=True)
class ConicInPlane:
    """Point conic ``y^T C y = 0`` in the frame coordinates of a plane."""

    plane: tuple
    frame: tuple
    matrix: tuple

    @classmethod
    def build(cls, plane, frame, matrix: Matrix) -> "ConicInPlane":
        return cls(tuple(plane), tuple(tuple(p) for p in frame), tuple(tuple(r) for r in matrix))

    @property
    def rank(self) -> int:
        return rank([list(r) for r in self.matrix])

    def equation(self) -> MultiPoly:
        return quadratic_from_symmetric([list(r) for r in self.matrix])

    def contains(self, X) -> bool:
        y = frame_coordinates([list(p) for p in self.frame], X)
        return self.equation()(y) == 0

    def pole(self, line_coords) -> Optional[list]:
        """Pole of a line ``xi . y = 0`` (frame coordinates) as a 3-space point."""
        r = self.rank
        if r < 3:
            raise RankError("polarity needs a non-degenerate conic", r)
        y = matvec(adjugate([list(row) for row in self.matrix]), list(line_coords))
        return point_from_frame(self.frame, y)
