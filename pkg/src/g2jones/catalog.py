"""Loading word catalogs: one expression per line, '#' starts a comment."""

from __future__ import annotations

from importlib import resources

from .words import MCGWord, parse_word


def parse_catalog(text: str) -> list[tuple[str, MCGWord]]:
    """Parse catalog text into (source line, word) pairs, skipping comments."""
    out = []
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            out.append((stripped, parse_word(stripped)))
    return out


def load_catalog(path) -> list[tuple[str, MCGWord]]:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_catalog(handle.read())


def builtin_catalog() -> list[tuple[str, MCGWord]]:
    """The packaged catalog of Torelli words."""
    text = (
        resources.files("g2jones")
        .joinpath("data/torelli_catalog.txt")
        .read_text(encoding="utf-8")
    )
    return parse_catalog(text)
