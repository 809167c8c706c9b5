"""Access to the data files bundled with the package.

All loaders accept an optional explicit path so users can swap in their own
dictionaries, lexicons, and reference lists; without one they read the
fixtures shipped under ``vietext/data``.
"""

from __future__ import annotations

from importlib import resources as _ilr
from pathlib import Path
from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, typing only
    from vietext.langid import Language

PathLike = Union[str, Path]

_LANG_CODES = {"Vietnamese": "vi", "English": "en"}


def _code(language: "Language | str") -> str:
    value = getattr(language, "value", language)
    try:
        return _LANG_CODES[value]
    except KeyError:
        raise KeyError(f"no bundled resources for language {value!r}") from None


def data_text(name: str) -> str:
    return (_ilr.files("vietext") / "data" / name).read_text(encoding="utf-8")


def read_text(path: PathLike | None, default_name: str) -> str:
    if path is not None:
        return Path(path).read_text(encoding="utf-8")
    return data_text(default_name)


def load_stopwords(language: "Language | str", path: PathLike | None = None) -> list[str]:
    text = read_text(path, f"stopwords_{_code(language)}.txt")
    return [line.strip() for line in text.splitlines() if line.strip()]


def load_abbreviations(language: "Language | str", path: PathLike | None = None) -> list[str]:
    text = read_text(path, f"abbreviations_{_code(language)}.txt")
    return [line.strip() for line in text.splitlines() if line.strip()]
