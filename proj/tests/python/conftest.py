import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schemas():
    from referencing import Registry, Resource

    folder = pathlib.Path(os.environ.get("BROUWER_SCHEMAS", ROOT / "schemas"))
    docs = {p.name: json.loads(p.read_text()) for p in folder.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(doc)) for name, doc in docs.items())
    return docs, registry


@pytest.fixture(scope="session")
def validate(schemas):
    import jsonschema

    docs, registry = schemas

    def check(name, instance):
        jsonschema.Draft202012Validator(docs[name + ".schema.json"], registry=registry).validate(instance)

    return check


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("BROUWER_CLI")

    def run(*args):
        if exe:
            p = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
            return p.returncode, p.stdout, p.stderr
        import brouwer

        return brouwer.run_cli(list(args))

    return run
