from __future__ import annotations

from enum import Enum


class PromptMode(str, Enum):
    WITH_TAXONOMY = "with-tax"
    WITHOUT_TAXONOMY = "no-tax"

    @property
    def columns(self) -> tuple[str, ...]:
        """Output-table header the model is asked for, in order."""
        if self is PromptMode.WITH_TAXONOMY:
            return ("Line", "Code", "Scenario ID", "Scenario", "Artifact", "Refactoring")
        return ("Line", "Code", "Scenario", "Artifact", "Refactoring")

    @property
    def label(self) -> str:
        return "w/Tax" if self is PromptMode.WITH_TAXONOMY else "wo/Tax"
