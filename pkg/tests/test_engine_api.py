from unittest.mock import patch

import pytest
from fastapi.testclient import TestClient

from engine.engine_api import app
from engine.src.errors import ConfigError, ConvergenceError, DomainError, UnboundedRegimeError


@pytest.fixture
def client():
    """Test client for FastAPI application"""
    return TestClient(app)


@pytest.fixture
def mock_norm_service():
    """Mock the NormService instance behind the endpoints"""
    with patch("engine.engine_api.norm_service") as mock_service:
        yield mock_service


def test_get_norm(client, mock_norm_service):
    """Test the /api/norm endpoint"""
    mock_norm_service.norm.return_value = {"theorem": "TH61", "kind": "exact", "value": 3.0}

    response = client.get("/api/norm?source=hardy-inf&target=bloch")

    mock_norm_service.norm.assert_called_once_with("hardy-inf", "bloch", None)
    assert response.status_code == 200
    assert response.json()["value"] == 3.0


def test_get_norm_passes_alpha(client, mock_norm_service):
    mock_norm_service.norm.return_value = {"value": 1.0}

    client.get("/api/norm?source=log-korenblum&target=korenblum&alpha=0.5")

    mock_norm_service.norm.assert_called_once_with("log-korenblum", "korenblum", 0.5)


def test_get_norm_unbounded(client, mock_norm_service):
    """An unbounded setting is a 422 carrying its regime"""
    mock_norm_service.norm.side_effect = UnboundedRegimeError("not bounded", "Bloch_alpha_eq1")

    response = client.get("/api/norm?source=bloch&target=bloch")

    assert response.status_code == 422
    assert response.json()["detail"] == {"error": "not bounded", "regime": "Bloch_alpha_eq1"}


@pytest.mark.parametrize("error,status", [
    (DomainError("alpha out of range"), 400),
    (ConfigError("bad grid"), 400),
    (ConvergenceError("budget exhausted"), 500),
    (RuntimeError("boom"), 500),
])
def test_get_bounds_error_mapping(client, mock_norm_service, error, status):
    mock_norm_service.bounds.side_effect = error

    response = client.get("/api/bounds?source=log-korenblum&target=korenblum&alpha=0.5")

    assert response.status_code == status


def test_get_bounds(client, mock_norm_service):
    mock_norm_service.bounds.return_value = {"value": 1.25, "search": {"arg_r": 0.5, "boundary_attained": False}}

    response = client.get("/api/bounds?source=log-korenblum&target=korenblum&alpha=0.5")

    assert response.status_code == 200
    assert response.json()["search"]["boundary_attained"] is False


def test_get_eval_parses_complex_point(client, mock_norm_service):
    """z is a complex literal; the result's complex value is split into re/im"""
    mock_norm_service.evaluate.return_value = {"z": 0.1 + 0.2j, "value": 1.0 - 0.5j}

    response = client.get("/api/eval", params={"function": "const", "z": "0.1+0.2j", "derivative": 1})

    mock_norm_service.evaluate.assert_called_once_with("const", 0.1 + 0.2j, None, 1, "kernel")
    assert response.status_code == 200
    assert response.json()["value"] == {"re": 1.0, "im": -0.5}


def test_get_eval_bad_point(client, mock_norm_service):
    response = client.get("/api/eval?function=const&z=abc")

    assert response.status_code == 400
    mock_norm_service.evaluate.assert_not_called()


def test_get_table(client, mock_norm_service):
    """Test the /api/table endpoint"""
    mock_norm_service.table.return_value = [{"alpha": 0.25}, {"alpha": 0.5}]

    response = client.get("/api/table?alphas=0.25,0.5")

    mock_norm_service.table.assert_called_once_with([0.25, 0.5])
    data = response.json()
    assert data["count"] == 2
    assert data["columns"][0] == "alpha"
    assert data["rows"][1]["alpha"] == 0.5


def test_get_table_bad_grid(client, mock_norm_service):
    response = client.get("/api/table?alphas=0.9:0.1:0.1")

    assert response.status_code == 400
    mock_norm_service.table.assert_not_called()


def test_get_formulas(client):
    response = client.get("/api/formulas")

    assert response.status_code == 200
    assert len(response.json()["formulas"]) == 13


def test_norm_end_to_end(client):
    """The real service answers the H^inf -> Bloch norm and rejects the Bloch self map"""
    response = client.get("/api/norm?source=hardy-inf&target=bloch")
    assert response.status_code == 200
    assert response.json()["value"] == 3.0

    response = client.get("/api/norm?source=bloch-alpha&target=bloch-alpha&alpha=2.5")
    assert response.status_code == 422
    assert response.json()["detail"]["regime"] == "Bloch_alpha_ge2"
