"""The two coloring-enumeration backends must be bit-for-bit interchangeable."""

import numpy as np
import pytest

from bordismkit import accel
from bordismkit.errors import ValidationError
from bordismkit.polytopes import product_of_simplices, simplex

# shape -> (polytope factors or simplex dim, rank, colorings, distinct keys)
SHAPES = {
    "triangle": (simplex(2), 2, 6, 1),
    "square": (product_of_simplices((1, 1)), 2, 18, 1),
    "tetrahedron": (simplex(3), 3, 168, 7),
    "prism": (product_of_simplices((2, 1)), 3, 840, 43),
    "cube": (product_of_simplices((1, 1, 1)), 3, 4200, 1),
}


def vertex_array(p):
    return np.array(sorted(sorted(v) for v in p.vertices), dtype=np.int16)


def collect(p, n, backend, block_rows=1 << 18):
    blocks = list(accel.coloring_blocks(vertex_array(p), p.num_facets, n,
                                        backend=backend, block_rows=block_rows))
    colors = np.concatenate([b[0] for b in blocks])
    keys = np.concatenate([b[1] for b in blocks])
    return colors, keys


def test_backends_agree_exactly():
    for p, n, count, distinct in SHAPES.values():
        nb_colors, nb_keys = collect(p, n, "numba")
        np_colors, np_keys = collect(p, n, "numpy")
        assert np.array_equal(nb_colors, np_colors)
        assert np.array_equal(nb_keys, np_keys)
        assert len(nb_colors) == count
        assert len({k.tobytes() for k in nb_keys}) == distinct


def test_block_size_does_not_change_the_stream():
    p, n, count, _ = SHAPES["cube"]
    whole_colors, whole_keys = collect(p, n, "numpy")
    for backend in ("numba", "numpy"):
        colors, keys = collect(p, n, backend, block_rows=64)
        assert len(colors) == count
        assert np.array_equal(colors, whole_colors)
        assert np.array_equal(keys, whole_keys)


def test_keys_are_padded_ascending_codes():
    p, n, _, _ = SHAPES["tetrahedron"]
    _, keys = collect(p, n, "numpy")
    for row in keys:
        real = row[row != accel.PAD]
        assert list(real) == sorted(set(int(c) for c in real))
        assert np.all(row[len(real):] == accel.PAD)


def test_colorings_use_nonzero_characters():
    p, n, _, _ = SHAPES["square"]
    colors, _ = collect(p, n, "numpy")
    assert colors.min() >= 1
    assert colors.max() < (1 << n)


def test_active_backend_resolution(monkeypatch):
    monkeypatch.delenv("BORDISMKIT_NO_NUMBA", raising=False)
    assert accel.active_backend("numpy") == "numpy"
    with pytest.raises(ValidationError):
        accel.active_backend("fortran")
    monkeypatch.setenv("BORDISMKIT_NO_NUMBA", "1")
    assert accel.active_backend() == "numpy"
    if accel._NUMBA_OK:
        # an explicit request wins over the environment flag
        assert accel.active_backend("numba") == "numba"
        monkeypatch.delenv("BORDISMKIT_NO_NUMBA")
        assert accel.active_backend() == "numba"


def test_input_validation():
    vf = vertex_array(simplex(2))
    with pytest.raises(ValidationError):
        accel.coloring_blocks(vf, 3, 0)
    with pytest.raises(ValidationError):
        accel.coloring_blocks(vf, 3, 5)  # keys pack 4 bits per character
    with pytest.raises(ValidationError):
        accel.coloring_blocks(vf, 3, 3)  # rank disagrees with the row width
