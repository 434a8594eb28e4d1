"""File formats round-trip byte for byte; CLI verbs compose and exit right."""

import io
import json

import pytest

from omlkit import (
    MalformedInput,
    benzene,
    boolean_algebra,
    bsub,
    catalog,
    identity_morphism,
    mo,
    sub,
)
from omlkit import fileio
from omlkit.cli import main


# -- formats -----------------------------------------------------------------

@pytest.mark.parametrize("name", ["2^3", "MO2", "benzene", "example22"])
def test_lattice_round_trip(name):
    L = catalog(name)
    text = fileio.dump_lattice(L)
    M = fileio.parse_lattice(text)
    assert fileio.dump_lattice(M) == text
    assert M.up == L.up and M.ortho == L.ortho and M.flavor == L.flavor


def test_lattice_parser_rejections():
    good = json.loads(fileio.dump_lattice(boolean_algebra(2)))
    dup = dict(good, leq=good["leq"] + [good["leq"][0]])
    with pytest.raises(MalformedInput):
        fileio.parse_lattice(json.dumps(dup))
    out_of_range = dict(good, leq=good["leq"] + [[0, 9]])
    with pytest.raises(MalformedInput):
        fileio.parse_lattice(json.dumps(out_of_range))
    bad_ortho = dict(good, ortho=[0, 1, 2])
    with pytest.raises(MalformedInput):
        fileio.parse_lattice(json.dumps(bad_ortho))
    with pytest.raises(MalformedInput):
        fileio.parse_lattice("[1, 2]")
    with pytest.raises(MalformedInput):
        fileio.parse_lattice("not json")


def test_poset_round_trip():
    p = bsub(catalog("example22"))
    text = fileio.dump_poset(p)
    q, labels = fileio.parse_poset(text)
    assert q.up == p.up
    assert labels == list(p.labels())
    assert fileio.dump_poset(p) == text


def test_morphism_round_trip():
    f = identity_morphism(mo(2))
    text = fileio.dump_morphism(f)
    g = fileio.parse_morphism(text, f.source, f.target)
    assert g.mapping == f.mapping and g.kind == "iso"
    with pytest.raises(MalformedInput):
        fileio.parse_morphism('{"kind": "hom", "map": [0,1,2,3,4,5]}',
                              f.source, f.target)  # identity is an iso, not a hom


def test_node_map_round_trip():
    p = bsub(mo(2))
    text = fileio.dump_node_map_labels(p, p, (0, 2, 1))
    assert fileio.parse_node_map(text, p, p) == (0, 2, 1)
    with pytest.raises(MalformedInput):
        fileio.parse_node_map('{"pairs": [[[0,5],[0,5]]]}', p, p)  # not total
    with pytest.raises(MalformedInput):
        fileio.parse_node_map('{"pairs": [[[0,-5],[0,5]]]}', p, p)
    with pytest.raises(MalformedInput):
        fileio.parse_node_map('{"pairs": [[[0,3],[0,5]]]}', p, p)  # not a node


def test_dot_export():
    p = bsub(catalog("example22"))
    dot = fileio.poset_to_dot(p)
    assert dot.startswith("digraph hasse {")
    assert dot.count(" -> ") == sum(p.cover_up[i].bit_count() for i in range(p.size))
    assert '[label="{0,11}"]' in dot
    assert fileio.poset_to_dot(p) == dot
    bare = fileio.poset_to_dot(p.as_abstract())
    assert '[label="0"]' in bare


# -- CLI -----------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_validate_benzene(tmp_path, capsys):
    path = tmp_path / "benzene.json"
    path.write_text(fileio.dump_lattice(benzene()))
    code, out, err = run_cli(capsys, "validate", str(path))
    assert code == 0 and err == ""
    assert out == "name: benzene\nsize: 6\nflavor: ortholattice (NOT orthomodular)\n"


def test_cli_catalog_and_bsub_pipeline(tmp_path, capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "catalog", "example22")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, dot, _ = run_cli(capsys, "bsub", "--dot")
    assert code == 0
    assert dot.count("n0 -> ") == 5  # the bottom is covered by the five atoms
    assert dot.count(" -> ") == 11


def test_cli_blocks(tmp_path, capsys):
    path = tmp_path / "ex22.json"
    path.write_text(fileio.dump_lattice(catalog("example22")))
    code, out, _ = run_cli(capsys, "blocks", str(path))
    assert code == 0
    assert out == "{0,1,2,3,6,7,8,11}\n{0,3,4,5,8,9,10,11}\n"


def test_cli_reconstruct_round_trip(tmp_path, capsys):
    poset_path = tmp_path / "bsub_mo2.json"
    poset_path.write_text(fileio.dump_poset(bsub(mo(2))))
    out_path = tmp_path / "rebuilt.json"
    code, out, _ = run_cli(capsys, "reconstruct", str(poset_path),
                           "--frame", "-o", str(out_path))
    assert code == 0
    assert "frame: 4 points" in out
    rebuilt = fileio.parse_lattice(out_path.read_text())
    assert rebuilt.n == 6 and rebuilt.flavor == "orthomodular"


def test_cli_lift_bsub(tmp_path, capsys):
    lat = tmp_path / "mo2.json"
    lat.write_text(fileio.dump_lattice(mo(2)))
    p = bsub(mo(2))
    iso = tmp_path / "iso.json"
    iso.write_text(fileio.dump_node_map_labels(p, p, tuple(range(p.size))))
    code, out, _ = run_cli(capsys, "lift-bsub", str(lat), str(lat), str(iso))
    assert code == 0
    assert len(json.loads(out)) == 4
    code, out, _ = run_cli(capsys, "lift-bsub", str(lat), str(lat), str(iso),
                           "--canonical")
    assert code == 0
    assert json.loads(out) == {"kind": "iso", "map": [0, 1, 2, 3, 4, 5]}


def test_cli_lift_sub(tmp_path, capsys):
    lat = tmp_path / "b3.json"
    lat.write_text(fileio.dump_lattice(boolean_algebra(3)))
    s = sub(boolean_algebra(3))
    iso = tmp_path / "iso.json"
    iso.write_text(fileio.dump_node_map_labels(s, s, tuple(range(s.size))))
    code, out, _ = run_cli(capsys, "lift-sub", str(lat), str(lat), str(iso))
    assert code == 0
    assert json.loads(out) == [{"kind": "iso", "map": list(range(8))}]


def test_cli_check_sachs(tmp_path, capsys):
    lat = tmp_path / "b4.json"
    lat.write_text(fileio.dump_lattice(boolean_algebra(4)))
    code, out, _ = run_cli(capsys, "check-sachs", str(lat))
    assert code == 0
    assert "dual order test agrees: 15/15" in out
    # non-Boolean input is a domain error
    lat.write_text(fileio.dump_lattice(mo(2)))
    code, _, err = run_cli(capsys, "check-sachs", str(lat))
    assert code == 1 and "error:" in err


def test_cli_check_determination(tmp_path, capsys):
    a = tmp_path / "mo2.json"
    a.write_text(fileio.dump_lattice(mo(2)))
    b = tmp_path / "benzene.json"
    b.write_text(fileio.dump_lattice(benzene()))
    code, out, _ = run_cli(capsys, "check-determination", str(a), str(b))
    assert code == 0
    assert "bsub posets isomorphic: yes" in out
    assert "lattices isomorphic: no" in out
    assert "outside OML hypothesis" in out


def test_cli_classify_hom(tmp_path, capsys):
    lat = tmp_path / "mo2.json"
    lat.write_text(fileio.dump_lattice(mo(2)))
    mor = tmp_path / "id.json"
    mor.write_text(fileio.dump_morphism(identity_morphism(mo(2))))
    code, out, _ = run_cli(capsys, "classify-hom", str(lat), str(lat), str(mor))
    assert code == 0
    assert "classification: FourBlockImage" in out
    assert "witness with equal preimage map" in out


def test_cli_domain_error_exit_code(tmp_path, capsys):
    code, _, err = run_cli(capsys, "catalog", "no-such-thing")
    assert code == 1
    assert err.startswith("error:")
    code, _, err = run_cli(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 1


def test_cli_usage_error_exit_code(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2


def test_cli_output_is_deterministic(tmp_path, capsys):
    code1, out1, _ = run_cli(capsys, "catalog", "hsum(2^3,2^3)")
    code2, out2, _ = run_cli(capsys, "catalog", "hsum(2^3,2^3)")
    assert code1 == code2 == 0 and out1 == out2


def test_cli_env_node_cap(tmp_path, capsys, monkeypatch):
    lat = tmp_path / "b4.json"
    lat.write_text(fileio.dump_lattice(boolean_algebra(4)))
    monkeypatch.setenv("OMLKIT_NODE_CAP", "3")
    code, _, err = run_cli(capsys, "sub", str(lat))
    assert code == 1 and "subalgebras" in err


def test_cli_selftest(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == 10 and "FAIL" not in out
