"""Few-shot prompt rendering from externalized template files.

A template file has two sections: the task instruction and the item block
used for both worked examples and the final query. Files are keyed by
(instruction language, task, distribution, variant) and live in
templates/<language>/<task>_<distribution>_<variant>.txt; see the bundled
set for the exact format.

A rendered prompt is the instruction, n answered demo items whose morpheme
count matches the query, and the query item cut right after its answer
label. Blocks are separated by blank lines; whitespace is byte-stable.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from morphsuite import suite as suite_mod
from morphsuite.errors import (
    InsufficientDemos,
    MissingContext,
    MissingTemplate,
    PlaceholderMismatch,
    SchemaError,
)
from morphsuite.rng import make_rng

ENGLISH = "english"
TURKISH = "turkish"
FINNISH = "finnish"
INSTRUCTION_LANGUAGES = (ENGLISH, TURKISH, FINNISH)

STANDARD = "standard"
CONTEXT = "context"
COT = "cot"
PARAPHRASED = "paraphrased"
VARIANTS = (STANDARD, CONTEXT, COT, PARAPHRASED)

# Data-language display names per instruction language.
LANGUAGE_NAMES = {
    ENGLISH: {"turkish": "Turkish", "finnish": "Finnish"},
    TURKISH: {"turkish": "Türkçe", "finnish": "Fince"},
    FINNISH: {"turkish": "turkki", "finnish": "suomi"},
}

# Polarity words shown in prompts and demo answers.
LABEL_WORDS = {
    ENGLISH: {"yes": "Yes", "no": "No"},
    TURKISH: {"yes": "Evet", "no": "Hayır"},
    FINNISH: {"yes": "Kyllä", "no": "Ei"},
}

_KNOWN_PLACEHOLDERS = {
    "index",
    "root",
    "definition",
    "affixes",
    "derived_word",
    "sentence",
    "answer",
    "language",
}


@dataclass(frozen=True)
class TemplateSet:
    instruction_language: str
    task: str
    distribution: str
    variant: str
    instruction: str
    item: str

    @property
    def key(self) -> tuple[str, str, str, str]:
        return (self.instruction_language, self.task, self.distribution, self.variant)


def _placeholders(text: str) -> set[str]:
    fields = set()
    for _, name, _, _ in string.Formatter().parse(text):
        if name:
            fields.add(name)
    return fields


def _required_item_placeholders(task: str, distribution: str, variant: str) -> set[str]:
    required = {"index", "root", "affixes", "answer"}
    if distribution == suite_mod.OUT_DIST:
        required.add("definition")
    if variant == CONTEXT:
        required.add("sentence")
    if task == suite_mod.SYSTEMATICITY:
        required.add("derived_word")
    return required


def parse_template(text: str, key, source: str) -> TemplateSet:
    language, task, distribution, variant = key
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("==") and stripped.endswith("=="):
            name = stripped.strip("= ").strip()
            current = sections.setdefault(name, [])
        elif current is not None:
            current.append(line)
    for name in ("instruction", "item"):
        if name not in sections:
            raise SchemaError(f"{source}: missing section '== {name} =='")

    instruction = "\n".join(sections["instruction"]).strip("\n")
    item = "\n".join(sections["item"]).strip("\n")

    unknown = (_placeholders(instruction) | _placeholders(item)) - _KNOWN_PLACEHOLDERS
    if unknown:
        raise PlaceholderMismatch(f"{source}: unknown placeholders {sorted(unknown)}")
    missing = _required_item_placeholders(task, distribution, variant) - _placeholders(item)
    if missing:
        raise PlaceholderMismatch(f"{source}: item lacks placeholders {sorted(missing)}")

    return TemplateSet(language, task, distribution, variant, instruction, item)


class TemplateCatalog:
    """Loaded templates keyed by (language, task, distribution, variant)."""

    def __init__(self, templates: dict, missing: list):
        self._templates = templates
        self.missing = missing

    def get(self, instruction_language, task, distribution, variant) -> TemplateSet:
        key = (instruction_language, task, distribution, variant)
        try:
            return self._templates[key]
        except KeyError:
            raise MissingTemplate(f"no template for {key}") from None

    def __len__(self) -> int:
        return len(self._templates)


def _full_matrix():
    for language in INSTRUCTION_LANGUAGES:
        for task in suite_mod.TASKS:
            for distribution in suite_mod.DISTRIBUTIONS:
                for variant in VARIANTS:
                    yield (language, task, distribution, variant)


def load_templates(directory=None) -> TemplateCatalog:
    """Load a template directory (bundled default when omitted).

    Combinations absent from the directory are reported via catalog.missing;
    asking for one raises MissingTemplate.
    """
    if directory is None:
        base = resources.files("morphsuite").joinpath("templates")
    else:
        base = Path(directory)
    templates = {}
    missing = []
    for key in _full_matrix():
        language, task, distribution, variant = key
        name = f"{language}/{task}_{distribution}_{variant}.txt"
        ref = base.joinpath(name) if directory is None else base / name
        try:
            text = ref.read_text(encoding="utf-8")
        except (FileNotFoundError, OSError):
            missing.append(key)
            continue
        templates[key] = parse_template(text, key, name)
    return TemplateCatalog(templates, missing)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _item_values(
    ts: TemplateSet, instance, index: int, answer: str, option
) -> dict:
    # 1-morpheme options carry their own affix (gold vs manual negative);
    # every other option shows the instance's presented order.
    affixes = instance.presented_affixes
    derived = ""
    if option is not None:
        derived = option.surface
        if option.affixes is not None:
            affixes = list(option.affixes)
    return {
        "index": index,
        "root": instance.shown_root,
        "definition": instance.definition or "",
        "affixes": ", ".join(affixes),
        "derived_word": derived,
        "sentence": instance.context_sentence or "",
        "answer": answer,
        "language": LANGUAGE_NAMES[ts.instruction_language][instance.language_id],
    }


def _demo_answer(ts: TemplateSet, demo, rng) -> tuple[object, str]:
    """Pick the demo's shown option (systematicity) and its answer text."""
    option = None
    if ts.task == suite_mod.SYSTEMATICITY:
        option = rng.choice(demo.options)
        polarity = "yes" if option.label == suite_mod.VALID else "no"
        answer = LABEL_WORDS[ts.instruction_language][polarity]
    else:
        answer = demo.gold_surface or ""
    if ts.variant == COT:
        answer = f"<Answer>{answer}</Answer>"
    return option, answer


def render(
    instance,
    template_set: TemplateSet,
    n_shots: int,
    demo_pool,
    rng,
    option_index: int | None = None,
) -> tuple[str, list[str]]:
    """Render one prompt (instruction, n worked examples, unanswered query).

    Returns the prompt text and the ids of the selected demo instances.
    """
    ts = template_set
    if ts.task != instance.task or ts.distribution != instance.distribution:
        raise MissingTemplate(
            f"template {ts.key} does not match instance "
            f"({instance.task}, {instance.distribution})"
        )
    matching = [
        d
        for d in demo_pool
        if d.task == instance.task
        and d.distribution == instance.distribution
        and d.morpheme_count == instance.morpheme_count
        and d.instance_id != instance.instance_id
    ]
    if len(matching) < n_shots:
        raise InsufficientDemos(
            f"instance {instance.instance_id}: need {n_shots} demos with "
            f"{instance.morpheme_count} morphemes, have {len(matching)}"
        )
    demos = rng.sample(matching, n_shots)

    if ts.variant == CONTEXT and not instance.context_sentence:
        raise MissingContext(
            f"instance {instance.instance_id} lacks a context sentence"
        )

    instruction = ts.instruction.format(
        language=LANGUAGE_NAMES[ts.instruction_language][instance.language_id]
    )
    blocks = [instruction]
    for i, demo in enumerate(demos, start=1):
        option, answer = _demo_answer(ts, demo, rng)
        blocks.append(ts.item.format(**_item_values(ts, demo, i, answer, option)))

    option = None
    if ts.task == suite_mod.SYSTEMATICITY:
        if option_index is None:
            raise SchemaError("systematicity rendering needs an option_index")
        option = instance.options[option_index]
    query = ts.item.format(
        **_item_values(ts, instance, len(demos) + 1, "", option)
    ).rstrip(" ")
    blocks.append(query)
    return "\n\n".join(blocks), [d.instance_id for d in demos]


def gold_answer(instance, instruction_language: str, option_index: int | None) -> str:
    """The reference answer string for one prompt, in the instruction language."""
    if instance.task == suite_mod.SYSTEMATICITY:
        label = instance.options[option_index].label
        polarity = "yes" if label == suite_mod.VALID else "no"
        return LABEL_WORDS[instruction_language][polarity]
    return instance.gold_surface or ""


def render_suite(
    instances,
    catalog: TemplateCatalog,
    instruction_language: str,
    variant: str,
    n_shots: int,
    seed: int = 0,
) -> list[dict]:
    """Render prompts for every eval-split instance of a suite.

    Systematicity instances get one prompt per option. Rows carry the join
    and parse metadata the evaluation stage needs (ids, task, variant, gold
    answer, affix blocks for the composition baselines).
    """
    demo_pool = [i for i in instances if i.split == suite_mod.DEMO_SPLIT]
    rows = []
    for instance in instances:
        if instance.split != suite_mod.EVAL_SPLIT:
            continue
        ts = catalog.get(
            instruction_language, instance.task, instance.distribution, variant
        )
        option_indices = (
            [None]
            if instance.task == suite_mod.PRODUCTIVITY
            else list(range(len(instance.options)))
        )
        for option_index in option_indices:
            rng = make_rng(seed, "render", instance.instance_id, option_index)
            prompt, demo_ids = render(
                instance, ts, n_shots, demo_pool, rng, option_index
            )
            rows.append(
                {
                    "instance_id": instance.instance_id,
                    "option_index": option_index,
                    "prompt": prompt,
                    "gold_answer": gold_answer(instance, instruction_language, option_index),
                    "task": instance.task,
                    "language_id": instance.language_id,
                    "instruction_language": instruction_language,
                    "variant": variant,
                    "morpheme_count": instance.morpheme_count,
                    "shown_root": instance.shown_root,
                    "prefix_forms": instance.prefix_forms,
                    "suffix_forms": instance.suffix_forms,
                    "demo_ids": demo_ids,
                }
            )
    return rows
