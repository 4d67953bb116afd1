import numpy as np
import pytest

from linegeom.complexes import diagonal_complex, singularity_surface
from linegeom.mesh import boundary_edges, euler_characteristic, mesh_surface, write_obj
from linegeom.poly import variables
from linegeom.steiner import roman_surface

x, y, z, w = variables(4)


def test_sphere_is_closed_with_euler_two():
    V, F = mesh_surface(x * x + y * y + z * z - w * w, -2, 2, 32)
    assert euler_characteristic(V, F) == 2 and boundary_edges(F) == 0
    r = np.linalg.norm(V, axis=1)
    assert np.all(np.abs(r - 1) < 0.1)


def test_torus_euler_zero():
    T = (x * x + y * y + z * z + 3 * w * w) ** 2 - 16 * w * w * (x * x + y * y)
    V, F = mesh_surface(T, -3.5, 3.5, 40)
    assert euler_characteristic(V, F) == 0


def test_roman_mesh_nonempty():
    V, F = mesh_surface(roman_surface().F, -1, 1, 20)
    assert len(F) > 0


def test_empty_box_warns():
    with pytest.warns(RuntimeWarning):
        V, F = mesh_surface(x * x + y * y + z * z - w * w, 3, 4, 4)
    assert len(F) == 0


def test_chart_and_validation():
    V, F = mesh_surface(x * x + y * y + z * z - w * w, -2, 2, 16, chart=0)
    assert len(F) > 0     # hyperboloid piece in the chart x = 1
    with pytest.raises(ValueError):
        mesh_surface(x, -1, 1, 1)
    with pytest.raises(ValueError):
        mesh_surface(x, 1, -1, 8)


def test_obj_is_deterministic(tmp_path):
    F = singularity_surface(diagonal_complex())
    outs = []
    for k in range(2):
        V, T = mesh_surface(F, -2, 2, 16)
        path = tmp_path / f"k{k}.obj"
        write_obj(path, V, T)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] and outs[0].startswith(b"v ")
