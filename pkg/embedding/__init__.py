"""
Linear-forest containment with certificates.
"""

from embedding.forest_embed import (
    DEFAULT_STEP_BUDGET,
    EmbeddingCertificate,
    contains_forest,
    find_path,
    verify_certificate,
)

__all__ = [
    "DEFAULT_STEP_BUDGET",
    "EmbeddingCertificate",
    "contains_forest",
    "find_path",
    "verify_certificate",
]
