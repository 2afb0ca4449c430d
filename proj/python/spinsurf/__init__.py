"""Exact invariants of spin surface bundles and Seifert homology spheres."""

import json

from ._core import *  # noqa: F401,F403
from ._core import DomainError, run_cli


def einvariant(document):
    """e-invariant of a Seifert document given as a dict (see the CLI schema)."""
    import os
    import tempfile

    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(document, f)
        path = f.name
    try:
        code, out, err = run_cli(["einvariant", "--input", path, "--json"])
    finally:
        os.unlink(path)
    if code != 0:
        raise DomainError(err.strip())
    return json.loads(out)
