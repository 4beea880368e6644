"""Assemble the system/user prompt pair for one snippet in one experiment mode."""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from qmigrate.corpus import CodeSnippet, number_lines
from qmigrate.modes import PromptMode
from qmigrate.taxonomy import Taxonomy, serialize_taxonomy

_PLACEHOLDER_RE = re.compile(r"\{\{\s*(\w+)\s*\}\}")

_TEMPLATE_NAMES = {
    PromptMode.WITH_TAXONOMY: ("system_with_tax", "user_with_tax"),
    PromptMode.WITHOUT_TAXONOMY: ("system_no_tax", "user_no_tax"),
}

_COLUMN_NOTES = {
    "Line": "the line number printed before the source line.",
    "Code": "the exact source line being analyzed.",
    "Scenario ID": (
        "the identifier of the matching scenario in the taxonomy, "
        "or an asterisk (*) if no scenario in the taxonomy matches."
    ),
    "Scenario": (
        "a short description combining the scenario category and summary, "
        'e.g. "Deprecation → function_name() deprecated".'
    ),
    "Artifact": "the affected module, class, function or parameter.",
    "Refactoring": (
        "the replacement code for Qiskit {version} or later; leave it blank if you are "
        "unsure or no clear fix applies."
    ),
}


class PromptError(ValueError):
    pass


class MissingTaxonomy(PromptError):
    def __init__(self):
        super().__init__("with-taxonomy prompts need a taxonomy")


class TemplateError(PromptError):
    def __init__(self, placeholder: str, template: str = ""):
        where = f" in {template}" if template else ""
        super().__init__(f"unresolved placeholder {{{{{placeholder}}}}}{where}")
        self.placeholder = placeholder


@dataclass(frozen=True)
class PromptBundle:
    mode: PromptMode
    target_version: str
    system_text: str
    user_text: str
    snippet_id: str


def default_template_dir() -> Path:
    return Path(str(resources.files("qmigrate") / "templates"))


def column_instructions(mode: PromptMode, target_version: str) -> str:
    cols = mode.columns
    count = {5: "five", 6: "six"}[len(cols)]
    lines = [
        f"Return your answer as a markdown table with exactly these {count} columns, in this order:",
        "| " + " | ".join(cols) + " |",
    ]
    for name in cols:
        note = _COLUMN_NOTES[name].format(version=target_version)
        lines.append(f"- {name}: {note}")
    lines.append(
        "If a change is not mandatory for compatibility with Qiskit "
        f"{target_version}, add the label (optional) to the Scenario column."
    )
    lines.append("Write one row per affected line. If no line needs changes, return only the header row.")
    return "\n".join(lines)


def render_template(template: str, values: dict[str, str], name: str = "") -> str:
    def sub(m: re.Match) -> str:
        key = m.group(1)
        if key not in values:
            raise TemplateError(key, name)
        return values[key]

    return _PLACEHOLDER_RE.sub(sub, template)


def _load(template_dir: Path, stem: str, variant: str | None) -> tuple[str, str]:
    if variant:
        candidate = template_dir / f"{stem}_{variant}.tpl"
        if candidate.is_file():
            return candidate.read_text(encoding="utf-8"), candidate.name
    path = template_dir / f"{stem}.tpl"
    return path.read_text(encoding="utf-8"), path.name


def _require(template: str, names: tuple[str, ...], filename: str) -> None:
    present = set(_PLACEHOLDER_RE.findall(template))
    for name in names:
        if name not in present:
            raise TemplateError(name, filename)


def build_prompt(
    snippet: CodeSnippet,
    t: Taxonomy | None,
    target_version: str,
    mode: PromptMode,
    template_dir: str | Path | None = None,
    variant: str | None = None,
) -> PromptBundle:
    """Build the prompt pair for ``snippet``.

    ``variant`` selects ``<name>_<variant>.tpl`` files when they exist (the
    shipped ``strict`` variant asks the model to keep the program's own names).
    """
    mode = PromptMode(mode)
    if mode is PromptMode.WITH_TAXONOMY:
        if t is None:
            raise MissingTaxonomy()
        if t.target_version != target_version:
            raise PromptError(f"taxonomy targets {t.target_version}, prompt targets {target_version}")
    template_dir = Path(template_dir) if template_dir is not None else default_template_dir()
    system_stem, user_stem = _TEMPLATE_NAMES[mode]
    system_tpl, system_name = _load(template_dir, system_stem, variant)
    user_tpl, user_name = _load(template_dir, user_stem, variant)

    values = {
        "target_version": target_version,
        "code": number_lines(snippet.source).rstrip("\n"),
        "columns": column_instructions(mode, target_version),
    }
    required_user = ("target_version", "code", "columns")
    if mode is PromptMode.WITH_TAXONOMY:
        values["taxonomy"] = serialize_taxonomy(t).rstrip("\n")
        required_user += ("taxonomy",)
    _require(system_tpl, ("target_version",), system_name)
    _require(user_tpl, required_user, user_name)

    return PromptBundle(
        mode=mode,
        target_version=target_version,
        system_text=render_template(system_tpl, values, system_name),
        user_text=render_template(user_tpl, values, user_name),
        snippet_id=snippet.id,
    )
