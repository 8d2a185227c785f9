import json
from pathlib import Path

import pytest

from dilint.harness import parse_tree

FIXTURES = Path(__file__).parent / "fixtures"
CATALOG = FIXTURES / "catalog"


def finding_key(finding):
    return (
        finding.rule_id,
        finding.file_path,
        finding.class_name,
        finding.element_name,
        finding.source_line,
    )


def manifest_key(item):
    return (item["rule"], item["file"], item["class"], item["element"], item["line"])


@pytest.fixture(scope="session")
def catalog_units():
    return parse_tree(CATALOG)


@pytest.fixture(scope="session")
def manifest():
    return json.loads((FIXTURES / "catalog_manifest.json").read_text(encoding="utf-8"))
