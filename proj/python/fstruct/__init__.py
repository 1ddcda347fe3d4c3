"""Exact integrability checks for F-structures."""

import json

from . import _core
from ._core import InconsistencyError, SchemaError, StructureError

__all__ = [
    "InconsistencyError",
    "SchemaError",
    "StructureError",
    "audit_failures",
    "canonical_manifest",
    "classify",
    "example",
    "generate",
    "nijenhuis",
    "report",
]


def _text(manifest):
    return manifest if isinstance(manifest, str) else json.dumps(manifest)


def example(id):
    return json.loads(_core.example_manifest(id))


def canonical_manifest(manifest):
    return json.loads(_core.canonical_manifest(_text(manifest)))


def report(manifest):
    return json.loads(_core.report(_text(manifest)))


def nijenhuis(manifest, a, b):
    return _core.nijenhuis(_text(manifest), a, b)


def classify(alpha, beta, K):
    return _core.classify(str(alpha), str(beta), K)


def generate(n, K, alpha, beta, kernel_dim=0, conjugation="none", seed=0):
    return json.loads(_core.generate(n, K, str(alpha), str(beta), kernel_dim, conjugation, seed))


def audit_failures(manifest):
    return _core.audit_failures(_text(manifest))
