"""Model evaluation client: chat-completions transport with retry/backoff,
a content-addressed response cache, answer parsing, and the random/majority
baselines plus mock backends used to validate the harness end to end.

Mock endpoints are selected with endpoint_url values of the form
mock://echo-gold, mock://random, mock://majority.
"""
from __future__ import annotations

import concurrent.futures
import hashlib
import json
import os
import re
import time
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

from morphsuite import derive, profiles
from morphsuite import suite as suite_mod
from morphsuite.errors import (
    AuthError,
    RateLimited,
    SchemaError,
    TransportError,
)
from morphsuite.jsonl import dumps
from morphsuite.rng import make_rng

YES = "yes"
NO = "no"
PARSE_FAILURE = "parse_failure"
WORD = "word"

# Polarity tokens accepted from model output, lowercased.
_POLARITY = {
    "yes": YES,
    "no": NO,
    "evet": YES,
    "hayır": NO,
    "kyllä": YES,
    "ei": NO,
}

_ANSWER_TAG = re.compile(r"<answer>(.*?)</answer>", re.IGNORECASE | re.DOTALL)
_STRIP_CHARS = " \t\"'`“”‘’.,;:!?()[]{}<>«»*_-–—"


@dataclass
class ModelConfig:
    endpoint_url: str
    model_name: str
    temperature: float = 0.0
    top_p: float = 1.0
    max_tokens: int = 256
    timeout: float = 60.0
    max_retries: int = 3
    auth_token_env: str | None = None
    seed: int = 0          # consumed by mock backends only
    parallelism: int = 1

    def __post_init__(self):
        if self.temperature < 0:
            raise SchemaError("temperature must be >= 0")
        if not 0 < self.top_p <= 1:
            raise SchemaError("top_p must be in (0, 1]")

    @classmethod
    def from_file(cls, path) -> "ModelConfig":
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        return cls(**data)

    @property
    def is_mock(self) -> bool:
        return self.endpoint_url.startswith("mock://")

    def cache_key_material(self, prompt: str) -> dict:
        return {
            "endpoint": self.endpoint_url,
            "model": self.model_name,
            "temperature": self.temperature,
            "top_p": self.top_p,
            "max_tokens": self.max_tokens,
            "prompt": prompt,
        }


@dataclass
class Completion:
    text: str
    cached: bool


class ResponseCache:
    """Content-addressed directory of response files.

    The key digests (endpoint, model, temperature, top_p, max_tokens,
    prompt); any parameter change misses. Writes are atomic, so a run can
    always read its own writes.
    """

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def key(self, cfg: ModelConfig, prompt: str) -> str:
        material = dumps(cfg.cache_key_material(prompt))
        return hashlib.sha256(material.encode("utf-8")).hexdigest()

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, cfg: ModelConfig, prompt: str) -> str | None:
        path = self._path(self.key(cfg, prompt))
        if not path.exists():
            return None
        with open(path, encoding="utf-8") as f:
            return json.load(f)["response"]

    def put(self, cfg: ModelConfig, prompt: str, response: str) -> None:
        import tempfile

        path = self._path(self.key(cfg, prompt))
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            json.dump({"response": response}, f, ensure_ascii=False, sort_keys=True)
        os.replace(tmp, path)


def _default_transport(url, payload, headers, timeout):
    """POST JSON and return (status_code, parsed_body_or_none, retry_after)."""
    import requests

    try:
        resp = requests.post(url, json=payload, headers=headers, timeout=timeout)
    except requests.RequestException as exc:
        raise TransportError(f"request to {url} failed: {exc}") from exc
    retry_after = resp.headers.get("Retry-After")
    try:
        body = resp.json()
    except ValueError:
        body = None
    return resp.status_code, body, retry_after


def _extract_text(body) -> str:
    try:
        return body["choices"][0]["message"]["content"]
    except (KeyError, IndexError, TypeError):
        raise TransportError(f"malformed chat-completions response: {body!r}") from None


def complete(
    prompt: str,
    cfg: ModelConfig,
    cache: ResponseCache | None = None,
    transport=None,
    sleep=time.sleep,
) -> Completion:
    """Return the raw completion for a prompt, served from cache when the
    (endpoint, model, params, prompt) digest hits.

    Retries 5xx and rate-limit responses with exponential backoff up to
    cfg.max_retries, honoring Retry-After when present.
    """
    if cache is not None:
        hit = cache.get(cfg, prompt)
        if hit is not None:
            return Completion(hit, cached=True)

    transport = transport or _default_transport
    headers = {"Content-Type": "application/json"}
    if cfg.auth_token_env:
        token = os.environ.get(cfg.auth_token_env)
        if not token:
            raise AuthError(f"environment variable {cfg.auth_token_env} is not set")
        headers["Authorization"] = f"Bearer {token}"
    payload = {
        "model": cfg.model_name,
        "messages": [{"role": "user", "content": prompt}],
        "temperature": cfg.temperature,
        "top_p": cfg.top_p,
        "max_tokens": cfg.max_tokens,
    }

    last_error: Exception | None = None
    last_retry_after = None
    for attempt in range(cfg.max_retries + 1):
        if attempt:
            delay = min(0.25 * 2 ** (attempt - 1), 8.0)
            if last_retry_after is not None:
                try:
                    delay = max(delay, float(last_retry_after))
                except ValueError:
                    pass
            sleep(delay)
        try:
            status, body, retry_after = transport(
                cfg.endpoint_url, payload, headers, cfg.timeout
            )
        except TransportError as exc:
            last_error = exc
            continue
        if status in (401, 403):
            raise AuthError(f"endpoint rejected credentials (HTTP {status})")
        if status == 429:
            last_retry_after = retry_after
            last_error = RateLimited("rate limited", retry_after=retry_after)
            continue
        if status >= 500:
            last_error = TransportError(f"HTTP {status} from {cfg.endpoint_url}")
            continue
        if status >= 400:
            raise TransportError(f"HTTP {status} from {cfg.endpoint_url}")
        text = _extract_text(body)
        if cache is not None:
            cache.put(cfg, prompt, text)
        return Completion(text, cached=False)

    if isinstance(last_error, RateLimited):
        raise last_error
    raise TransportError(
        f"giving up after {cfg.max_retries + 1} attempts: {last_error}"
    )


# ---------------------------------------------------------------------------
# Answer parsing
# ---------------------------------------------------------------------------

def parse_productivity(raw_text: str, profile: profiles.LanguageProfile) -> str | None:
    """Extract the generated word; None means parse failure (scores wrong).

    Rules: prefer the last <Answer> tag if present, else the last nonempty
    line; drop any label before the last colon; strip surrounding quotes and
    punctuation; NFC-normalize and case-fold via the profile.
    """
    if raw_text is None:
        return None
    tags = _ANSWER_TAG.findall(raw_text)
    if tags:
        candidate = tags[-1]
    else:
        lines = [line for line in raw_text.splitlines() if line.strip()]
        if not lines:
            return None
        candidate = lines[-1]
    if ":" in candidate:
        candidate = candidate.rsplit(":", 1)[1]
    candidate = candidate.strip(_STRIP_CHARS)
    candidate = unicodedata.normalize("NFC", candidate)
    candidate = profiles.case_fold(candidate, profile)
    return candidate or None


def parse_systematicity(
    raw_text: str,
    instruction_language: str | None = None,
    cot: bool = False,
) -> str | None:
    """Map a yes/no style answer to polarity; None means parse failure.

    Accepted tokens (any instruction language): yes, no, evet, hayır,
    kyllä, ei. With cot=True the last <Answer> tag is consulted first.
    """
    del instruction_language, cot  # tokens of every language are always accepted,
    # and <Answer> tags are always consulted first when present
    if raw_text is None:
        return None
    tags = _ANSWER_TAG.findall(raw_text)
    if tags:
        candidate = tags[-1]
    else:
        lines = [line for line in raw_text.splitlines() if line.strip()]
        if not lines:
            return None
        candidate = lines[-1]
    if ":" in candidate:
        candidate = candidate.rsplit(":", 1)[1]
    token = unicodedata.normalize("NFC", candidate.strip(_STRIP_CHARS)).casefold()
    return _POLARITY.get(token)


# ---------------------------------------------------------------------------
# Baselines and mock backends
# ---------------------------------------------------------------------------

RANDOM_BASELINE = "random"
MAJORITY_BASELINE = "majority"


def baseline_predict(instance, kind: str, rng, option_index: int | None = None):
    """Prediction of a trivial baseline for one prompt of an instance.

    random/productivity composes a uniformly random per-block ordering;
    random/systematicity flips a fair coin per option; majority always says
    no and abstains (None) on productivity.
    """
    if kind == MAJORITY_BASELINE:
        if instance.task == suite_mod.PRODUCTIVITY:
            return None
        return NO
    if kind != RANDOM_BASELINE:
        raise SchemaError(f"unknown baseline {kind!r}")
    if instance.task == suite_mod.PRODUCTIVITY:
        prefixes = list(instance.prefix_forms)
        suffixes = list(instance.suffix_forms)
        rng.shuffle(prefixes)
        rng.shuffle(suffixes)
        return derive.compose_forms(instance.shown_root, prefixes, suffixes)
    return rng.choice([YES, NO])


def mock_response(row: dict, cfg: ModelConfig) -> str:
    """Deterministic stand-ins for a model, driven by the prompt row.

    The generator is derived from (cfg.seed, prompt), so repeated calls for
    the same prompt agree with whatever the cache would have replayed.
    """
    kind = cfg.endpoint_url.removeprefix("mock://")
    if kind == "echo-gold":
        return row["gold_answer"]
    if kind == "majority":
        return "" if row["task"] == suite_mod.PRODUCTIVITY else "No"
    if kind == "random":
        rng = make_rng(cfg.seed, row["prompt"])
        if row["task"] == suite_mod.PRODUCTIVITY:
            prefixes = list(row.get("prefix_forms", []))
            suffixes = list(row.get("suffix_forms", []))
            rng.shuffle(prefixes)
            rng.shuffle(suffixes)
            return derive.compose_forms(row["shown_root"], prefixes, suffixes)
        return rng.choice(["Yes", "No"])
    raise SchemaError(f"unknown mock backend {cfg.endpoint_url!r}")


# ---------------------------------------------------------------------------
# Batch evaluation
# ---------------------------------------------------------------------------

@dataclass
class EvalRecord:
    """One model (or baseline) answer joined to its prompt metadata."""

    instance_id: str
    option_index: int | None
    raw_response: str
    parsed_kind: str          # word | yes | no | parse_failure
    parsed_value: str | None
    gold: str
    model_name: str
    cached: bool = False

    def to_row(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "option_index": self.option_index,
            "raw_response": self.raw_response,
            "parsed_kind": self.parsed_kind,
            "parsed_value": self.parsed_value,
            "gold": self.gold,
            "model_name": self.model_name,
            "cached": self.cached,
        }

    @classmethod
    def from_row(cls, row: dict) -> "EvalRecord":
        return cls(
            instance_id=row["instance_id"],
            option_index=row.get("option_index"),
            raw_response=row.get("raw_response", ""),
            parsed_kind=row["parsed_kind"],
            parsed_value=row.get("parsed_value"),
            gold=row.get("gold", ""),
            model_name=row.get("model_name", ""),
            cached=row.get("cached", False),
        )


def parse_row_response(row: dict, raw_text: str) -> tuple[str, str | None]:
    """Parse one raw response according to the prompt row's task/variant."""
    cot = row.get("variant") == "cot"
    if row["task"] == suite_mod.PRODUCTIVITY:
        profile = suite_mod.profile_for(row["language_id"])
        word = parse_productivity(raw_text, profile)
        return (WORD, word) if word is not None else (PARSE_FAILURE, None)
    polarity = parse_systematicity(raw_text, row.get("instruction_language"), cot=cot)
    return (polarity, polarity) if polarity is not None else (PARSE_FAILURE, None)


def evaluate_rows(
    rows,
    cfg: ModelConfig,
    cache: ResponseCache | None = None,
    transport=None,
) -> list[EvalRecord]:
    """Answer every prompt row and parse the responses.

    HTTP requests run with cfg.parallelism workers; results are keyed by
    (instance_id, option_index), so completion order never matters.
    """
    rows = list(rows)

    def answer(row):
        if cfg.is_mock:
            text = mock_response(row, cfg)
            if cache is not None:
                cached = cache.get(cfg, row["prompt"]) is not None
                if not cached:
                    cache.put(cfg, row["prompt"], text)
                return Completion(text, cached)
            return Completion(text, False)
        return complete(row["prompt"], cfg, cache, transport=transport)

    completions: list[Completion]
    if cfg.parallelism > 1 and not cfg.is_mock:
        with concurrent.futures.ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            completions = list(pool.map(answer, rows))
    else:
        completions = [answer(row) for row in rows]

    records = []
    for row, completion in zip(rows, completions):
        kind, value = parse_row_response(row, completion.text)
        records.append(
            EvalRecord(
                instance_id=row["instance_id"],
                option_index=row.get("option_index"),
                raw_response=completion.text,
                parsed_kind=kind,
                parsed_value=value,
                gold=row.get("gold_answer", ""),
                model_name=cfg.model_name,
                cached=completion.cached,
            )
        )
    return records
