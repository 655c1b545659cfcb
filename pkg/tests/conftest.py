import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def write_lines(tmp_path):
    def _write(name, lines):
        path = tmp_path / name
        path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
        return path

    return _write


# Two positive-leaning and two negative-leaning words, each also present in two
# documents of the other polarity so that no huge alpha can select them.
TOY_POSITIVE = [
    "面白いし楽しいゲーム",
    "面白いし楽しい",
    "面白いし楽しいけどつまらない",
    "面白いけど楽しいしつまらない",
    "面白いし楽しいが退屈",
    "面白い楽しい退屈",
]
TOY_NEGATIVE = [
    "つまらないし退屈",
    "つまらない退屈なゲーム",
    "つまらないし退屈だが面白い",
    "つまらないし退屈けど面白い",
    "つまらないし退屈で楽しい",
    "つまらない退屈楽しい",
]


@pytest.fixture
def toy_corpus(tmp_path):
    import json

    path = tmp_path / "toy.jsonl"
    rows = [{"id": f"p{i}", "text": t, "sentiment": "Positive"} for i, t in enumerate(TOY_POSITIVE)]
    rows += [{"id": f"n{i}", "text": t, "sentiment": "Negative"} for i, t in enumerate(TOY_NEGATIVE)]
    path.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in rows), encoding="utf-8")
    return path


ACCEPTANCE_RESULTS = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; FAIL unless the test body finishes."""
    entry = {"name": request.node.name, "status": "FAIL", "detail": ""}
    ACCEPTANCE_RESULTS.append(entry)

    def passed(detail=""):
        entry["status"], entry["detail"] = "PASS", detail

    yield passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for e in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{e['status']}  {e['name']}  {e['detail']}")
