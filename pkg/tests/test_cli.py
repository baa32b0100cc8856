"""End-to-end command-line checks through real subprocesses."""

import json
import subprocess
import sys

from bordismkit import jsonio
from bordismkit.algebra import ExtPolynomial, Gf2Polynomial, dual
from bordismkit.bordism import UNITARY, UNORIENTED, BordismClass
from bordismkit.graphs import one_skeleton, torus_graph_from_pair
from bordismkit.polytopes import (Coloring, coloring_polynomial,
                                  product_of_simplices, standard_z_coloring)

RP2 = Gf2Polynomial(2, [((0, 1), (1, 0)), ((0, 1), (1, 1)), ((1, 0), (1, 1))])
CP1 = ExtPolynomial(1, {((-1,),): -1, ((1,),): 1})
CP2 = ExtPolynomial(2, {((-1, 0), (-1, 1)): -1, ((0, -1), (1, -1)): 1,
                        ((0, 1), (1, 0)): -1})
RP2_COLORING = Coloring("gf2", {0: (1, 0), 1: (0, 1), 2: (1, 1)})

SINGLE_MONOMIAL = ('{"n":2,"ring":"gf2","space":"primal",'
                   '"terms":[{"chars":[[0,1],[1,0]],"coeff":1}]}')


def run_cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "bordismkit.cli", *argv],
        capture_output=True, text=True, input=stdin)


def dumps(obj):
    return jsonio.canonical_dumps(obj)


# -- exit codes and exact bytes ------------------------------------------


def test_dim_exact_output():
    r = run_cli("dim", "--n", "3")
    assert r.returncode == 0
    assert r.stdout == '{"dim":13}\n'


def test_dim_with_window():
    r = run_cli("dim", "--n", "2", "--weight-bound", "1")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out == {"dim": 1, "weight_bound": 1, "window_dim": 13}


def test_dim_over_cap_is_a_domain_error():
    r = run_cli("dim", "--n", "99")
    assert r.returncode == 1
    err = json.loads(r.stdout)["error"]
    assert err["code"] == "resource-limit"


def test_check_single_monomial_exact_output():
    r = run_cli("check", SINGLE_MONOMIAL)
    assert r.returncode == 0
    assert r.stdout == '{"in_image":false,"reason":"d(g*) != 0"}\n'


def test_check_reads_stdin():
    r = run_cli("check", "-", stdin=dumps(jsonio.polynomial_to_obj(RP2)))
    assert r.returncode == 0
    assert json.loads(r.stdout) == {"in_image": True, "reason": "d(g*) = 0"}


def test_malformed_json_exits_two():
    r = run_cli("check", "{oops")
    assert r.returncode == 2
    assert json.loads(r.stdout)["error"]["code"] == "input-format"


def test_missing_file_exits_two():
    r = run_cli("check", "/no/such/artifact.json")
    assert r.returncode == 2


def test_repeated_character_is_a_domain_error():
    bad = ('{"n":2,"ring":"gf2","space":"primal",'
           '"terms":[{"chars":[[1,0],[1,0]],"coeff":1}]}')
    r = run_cli("check", bad)
    assert r.returncode == 1
    assert json.loads(r.stdout)["error"]["code"] == "validation-error"


# -- piping verbs into each other ---------------------------------------------


def test_dual_round_trips_byte_identically(tmp_path):
    src = tmp_path / "rp2.json"
    src.write_text(dumps(jsonio.polynomial_to_obj(RP2)))
    first = run_cli("dual", str(src))
    assert first.returncode == 0
    second = run_cli("dual", "-", stdin=first.stdout)
    assert second.returncode == 0
    assert second.stdout == src.read_text()


def test_dual_requires_faithful_input():
    r = run_cli("dual", SINGLE_MONOMIAL.replace("[[0,1],[1,0]]", "[[1,1],[0,1],[1,0]]"))
    assert r.returncode == 1


def test_diff_of_kernel_element_is_zero():
    r = run_cli("diff", "-", stdin=dumps(jsonio.polynomial_to_obj(dual(CP1))))
    assert r.returncode == 0
    assert json.loads(r.stdout)["terms"] == []


# -- geometry verbs --------------------------------------------------------------


def test_poly_of_polytope_matches_library(tmp_path):
    p = product_of_simplices((2,))
    src = tmp_path / "colored.json"
    src.write_text(dumps(jsonio.polytope_to_obj(p, RP2_COLORING)))
    r = run_cli("poly-of-polytope", str(src))
    assert r.returncode == 0
    want = jsonio.polynomial_to_obj(coloring_polynomial(p, RP2_COLORING))
    assert r.stdout == dumps(want)


def test_poly_of_polytope_needs_a_coloring():
    r = run_cli("poly-of-polytope", dumps(
        jsonio.polytope_to_obj(product_of_simplices((2,)))).strip())
    assert r.returncode == 1


def test_poly_of_graph_and_cross_verb_guard(tmp_path):
    p = product_of_simplices((2,))
    skel = one_skeleton(p, RP2_COLORING)
    r = run_cli("poly-of-graph", dumps(jsonio.colored_graph_to_obj(skel)).strip())
    assert r.returncode == 0
    # the graph polynomial is the dual of the polytope's coloring polynomial
    assert json.loads(r.stdout) == jsonio.polynomial_to_obj(
        dual(coloring_polynomial(p, RP2_COLORING)))

    torus = torus_graph_from_pair(p, standard_z_coloring((2,)))
    wrong = run_cli("poly-of-graph", dumps(jsonio.torus_graph_to_obj(torus)).strip())
    assert wrong.returncode == 1
    assert "torus-poly" in json.loads(wrong.stdout)["error"]["message"]


def test_torus_poly_from_graph_and_from_polytope():
    p = product_of_simplices((1,))
    g = torus_graph_from_pair(p, standard_z_coloring((1,)))
    from_graph = run_cli("torus-poly", dumps(jsonio.torus_graph_to_obj(g)).strip())
    assert from_graph.returncode == 0
    assert json.loads(from_graph.stdout) == jsonio.polynomial_to_obj(CP1)

    colored = dumps(jsonio.polytope_to_obj(p, standard_z_coloring((1,))))
    from_polytope = run_cli("torus-poly", colored.strip())
    assert from_polytope.stdout == from_graph.stdout


def test_torus_poly_rejects_gf2_graphs():
    skel = one_skeleton(product_of_simplices((2,)), RP2_COLORING)
    r = run_cli("torus-poly", dumps(jsonio.colored_graph_to_obj(skel)).strip())
    assert r.returncode == 1
    assert "poly-of-graph" in json.loads(r.stdout)["error"]["message"]


# -- numbers and reports --------------------------------------------------------


def test_chern_sweep_for_cp1():
    r = run_cli("chern", dumps(jsonio.polynomial_to_obj(CP1)).strip())
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["n"] == 1 and out["degree_bound"] == 2
    assert all(entry["j"] == 0 for entry in out["numbers"])
    by_ij = {(e["i"], e["j"]): e for e in out["numbers"]}
    assert by_ij[(1, 0)] == {"i": 1, "j": 0, "polynomial": True,
                             "integral": True, "constant": 2}


def test_chern_accepts_fixed_point_data():
    # CP^1 as raw fixed-point data: two points, both of positive sign
    obj = {"flavor": "z", "n": 1,
           "points": [{"sign": 1, "weights": [[1]]},
                      {"sign": 1, "weights": [[-1]]}]}
    r = run_cli("chern", json.dumps(obj), "--degree-bound", "1")
    assert r.returncode == 0
    by_ij = {(e["i"], e["j"]): e for e in json.loads(r.stdout)["numbers"]}
    assert by_ij[(1, 0)]["constant"] == 2


def test_reduce_class_and_bare_polynomial():
    cls = dumps(jsonio.class_to_obj(BordismClass(UNITARY, CP2)))
    r = run_cli("reduce", "-", stdin=cls)
    assert r.returncode == 0
    want = jsonio.class_to_obj(BordismClass(UNORIENTED, RP2))
    assert r.stdout == dumps(want)

    bare = run_cli("reduce", dumps(jsonio.polynomial_to_obj(CP1)).strip())
    assert bare.returncode == 0
    assert json.loads(bare.stdout)["terms"] == []


def test_reduce_rejects_gf2_input():
    r = run_cli("reduce", dumps(jsonio.polynomial_to_obj(RP2)).strip())
    assert r.returncode == 1


def test_generators_report():
    r = run_cli("generators", "--n", "2")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["n"] == 2
    assert out["count"] == 2
    assert out["kernel_dim"] == 1
    assert out["spanning_rank"] == 1
    assert out["spans_kernel"] is True
    assert len(out["generators"]) == 2


def test_verify_json_report():
    r = run_cli("verify", "--format", "json")
    out = json.loads(r.stdout)
    assert out["total"] == 10
    assert len(out["results"]) == 10
    assert out["results"][0]["name"] == "dimension-golden-numbers"
    assert (r.returncode == 0) == (out["passed"] == out["total"])
    for entry in out["results"]:
        assert isinstance(entry["passed"], bool)
        assert entry["detail"]
