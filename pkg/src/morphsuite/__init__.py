"""morphsuite: morphological composition test suites for agglutinative
languages (Turkish, Finnish) and a model evaluation harness.

The pipeline: segmented records -> nonce roots (for the novel-root variant)
-> stratified task suites -> few-shot prompts -> model/baseline answers ->
stratified score reports. See the CLI (morphsuite --help) and README.
"""

__version__ = "0.1.0"

from morphsuite.derive import Affix, CandidateDerivation, SegmentedWord, compose, levenshtein
from morphsuite.nonce import NonceMapping, make_nonce, nonce_finnish, nonce_turkish
from morphsuite.profiles import LanguageProfile, case_fold, classify, load_profile
from morphsuite.suite import Option, TaskInstance, build_suite, ingest, stratified_sample

__all__ = [
    "__version__",
    "Affix",
    "CandidateDerivation",
    "LanguageProfile",
    "NonceMapping",
    "Option",
    "SegmentedWord",
    "TaskInstance",
    "build_suite",
    "case_fold",
    "classify",
    "compose",
    "ingest",
    "levenshtein",
    "load_profile",
    "make_nonce",
    "nonce_finnish",
    "nonce_turkish",
    "stratified_sample",
]
