"""Group input and output, standard constructors and the verification corpus."""

from .constructors import alternating, cyclic, dihedral, direct_product, generalized_quaternion, symmetric
from .groupfile import (
    GroupFile,
    emit_group,
    parse_generators,
    parse_group,
    parse_group_file,
    parse_perm,
    read_group_file,
)
from .manifest import CorpusEntry, CorpusManifest, bundled_corpus, generate_corpus, load_corpus


__all__ = [
    "CorpusEntry",
    "CorpusManifest",
    "GroupFile",
    "alternating",
    "bundled_corpus",
    "cyclic",
    "dihedral",
    "direct_product",
    "emit_group",
    "generalized_quaternion",
    "generate_corpus",
    "load_corpus",
    "parse_generators",
    "parse_group",
    "parse_group_file",
    "parse_perm",
    "read_group_file",
    "symmetric",
]
