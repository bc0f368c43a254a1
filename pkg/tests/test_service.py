"""HTTP service behavior through the in-process test client."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from clickomania.engine import parse_board, render_board
from clickomania.partition_gen import PartitionInstance, validate_partition_board
from clickomania.sat_gen import CnfFormula, validate_sat_board
from clickomania.service import build_app


@pytest.fixture()
def client():
    with TestClient(build_app()) as c:
        yield c


def view_board(view):
    return parse_board("\n".join(view["rows"]))


def test_create_and_fetch_board(client):
    view = client.post("/boards", json={"text": "aab\nbab"}).json()
    assert view["width"] == 3 and view["height"] == 2
    assert view["remaining"] == 6 and not view["solved"]
    assert view["rows"] == ["aab", "bab"]
    assert view["history_depth"] == 1
    again = client.get(f"/boards/{view['id']}")
    assert again.status_code == 200 and again.json() == view


def test_view_groups_and_moves_match_engine(client):
    view = client.post("/boards", json={"text": "aab\nbab"}).json()
    reps = {tuple(g["representative"]): g for g in view["groups"]}
    assert set(reps) == {(0, 0), (0, 1), (2, 0)}
    assert sorted(map(tuple, reps[(0, 1)]["cells"])) == [(0, 1), (1, 0), (1, 1)]
    assert view["legal_moves"] == [[0, 1], [2, 0]]


def test_parse_error_is_400(client):
    response = client.post("/boards", json={"text": "ab\nabc"})
    assert response.status_code == 400


def test_unknown_session_is_404(client):
    assert client.get("/boards/missing").status_code == 404
    assert client.post("/boards/missing/click", json={"cell": [0, 0]}).status_code == 404


def test_click_undo_roundtrip(client):
    view = client.post("/boards", json={"text": "aab\nbab"}).json()
    board_id = view["id"]
    clicked = client.post(f"/boards/{board_id}/click", json={"cell": [0, 1]}).json()
    assert clicked["remaining"] == 3 and clicked["history_depth"] == 2
    assert clicked["rows"] == [".b", "bb"]
    undone = client.post(f"/boards/{board_id}/undo").json()
    assert undone["rows"] == view["rows"] and undone["history_depth"] == 1
    assert client.post(f"/boards/{board_id}/undo").status_code == 409


def test_illegal_clicks_are_409(client):
    board_id = client.post("/boards", json={"text": "aab\nbab"}).json()["id"]
    for cell in ([0, 0], [9, 0], [0, 9], [-1, 0]):
        response = client.post(f"/boards/{board_id}/click", json={"cell": cell})
        assert response.status_code == 409, cell


def test_every_view_is_in_normal_form(client):
    view = client.post("/boards", json={"text": "ab\nab"}).json()
    board_id = view["id"]
    for cell in ([0, 0], [0, 0]):
        view = client.post(f"/boards/{board_id}/click", json={"cell": cell}).json()
        board = view_board(view)
        assert render_board(board).splitlines() == view["rows"]
    assert view["solved"] and view["remaining"] == 0


def test_hint_reports_replayable_move(client):
    view = client.post("/boards", json={"text": "aab\nbab"}).json()
    hint = client.post(f"/boards/{view['id']}/hint", json={}).json()
    assert hint["exact"] is True and hint["projected"] == 6
    assert hint["move"] in view["legal_moves"]
    solved_id = client.post("/boards", json={"text": ""}).json()["id"]
    hint = client.post(f"/boards/{solved_id}/hint", json={}).json()
    assert hint["move"] is None and hint["projected"] == 0


def test_solvability_routes_by_shape(client):
    one_col = client.post("/boards", json={"text": "a\nb\nb\na"}).json()
    out = client.get(f"/boards/{one_col['id']}/solvability").json()
    assert out == {"solvable": "yes", "method": "two-color-linear"}
    grid = client.post("/boards", json={"text": "ab\nba"}).json()
    out = client.get(f"/boards/{grid['id']}/solvability").json()
    assert out["solvable"] == "no" and out["method"] == "oracle"


def test_generate_partition_endpoint(client):
    response = client.post(
        "/generate/3partition", json={"target": 6, "elements": [2] * 6}
    )
    view = response.json()
    assert response.status_code == 200
    instance = PartitionInstance(6, (2,) * 6)
    assert validate_partition_board(view_board(view), instance)
    assert view["generator"]["kind"] == "3partition"
    bad = client.post("/generate/3partition", json={"target": 4, "elements": [2] * 6})
    assert bad.status_code == 400


def test_generate_sat_endpoint(client):
    response = client.post(
        "/generate/3sat", json={"num_vars": 2, "clauses": [[1, -2], [2, 1, 2]]}
    )
    assert response.status_code == 200
    view = response.json()
    formula = CnfFormula(2, ((1, -2), (2, 1, 2)))
    assert validate_sat_board(view_board(view), formula)
    via_dimacs = client.post(
        "/generate/3sat", json={"dimacs": "p cnf 2 1\n1 -2 0\n"}
    )
    assert via_dimacs.status_code == 200
    assert client.post("/generate/3sat", json={}).status_code == 400


def test_persistence_survives_restart(tmp_path):
    with TestClient(build_app(persist_dir=tmp_path)) as c:
        board_id = c.post("/boards", json={"text": "aab\nbab"}).json()["id"]
        c.post(f"/boards/{board_id}/click", json={"cell": [0, 1]})
    with TestClient(build_app(persist_dir=tmp_path)) as c:
        view = c.get(f"/boards/{board_id}").json()
        assert view["history_depth"] == 2 and view["rows"] == [".b", "bb"]
        undone = c.post(f"/boards/{board_id}/undo").json()
        assert undone["rows"] == ["aab", "bab"]
