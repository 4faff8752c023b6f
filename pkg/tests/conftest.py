from __future__ import annotations

import importlib.resources
import json

import pytest

from qct.quiver import load_quiver

DATA = importlib.resources.files("qct") / "data"
SCHEMAS = importlib.resources.files("qct") / "schemas"


def data_path(name: str) -> str:
    return str(DATA / f"{name}.q")


def load(name: str):
    return load_quiver(data_path(name))


def schema_validator(name: str):
    import jsonschema
    from referencing import Registry, Resource

    registry = Registry()
    for f in SCHEMAS.iterdir():
        if f.name.endswith(".json"):
            doc = json.loads(f.read_text())
            registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    schema = json.loads((SCHEMAS / f"{name}.json").read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


@pytest.fixture(scope="session")
def vertex22():
    return load("vertex22")


@pytest.fixture(scope="session")
def twelve():
    return load("twelve")


@pytest.fixture(scope="session")
def lattice23():
    return load("lattice23")


@pytest.fixture(scope="session")
def oracle_vertex22(vertex22):
    from qct.oracle import Oracle
    return Oracle(vertex22, 2)


@pytest.fixture(scope="session")
def oracle_twelve(twelve):
    from qct.oracle import Oracle
    return Oracle(twelve, 2)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
