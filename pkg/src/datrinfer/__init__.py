"""Parse, evaluate and induce DATR default-inheritance theories."""

from .dia import is_maximally_reduced, reduce
from .evaluator import DEFAULT_DEPTH_LIMIT, EvaluationError, dump, evaluate
from .model import (
    Extensional,
    GlobalNode,
    GlobalNodePath,
    GlobalPath,
    LocalNode,
    LocalNodePath,
    LocalPath,
    Query,
    Ref,
    Sentence,
    Theory,
)
from .search import InferenceResult, SearchConfig, infer
from .syntax import (
    DatrSyntaxError,
    parse_extensional,
    parse_query,
    parse_theory,
    print_extensional,
    print_theory,
)
from .transform import RULES, Rewrite, apply, candidates
from .verifier import VerificationReport, initial_hypothesis, verify

__version__ = "0.1.0"
