#!/usr/bin/env python3
"""Regenerates the tokenizer's character-class tables and prefix files.

The tables mirror the Perl Unicode property sets used by the Moses
tokenizer, taken from the sacremoses package (pip install sacremoses).

    python3 crates/core/scripts/gen_tables.py
"""

import os

from sacremoses.corpus import Perluniprops
from sacremoses.indic import NUKTAS, VIRAMAS
from sacremoses._data_nonbreaking_prefixes import NONBREAKING_PREFIXES

HERE = os.path.dirname(os.path.abspath(__file__))
CORE = os.path.dirname(HERE)
LANGS = ["en", "es", "ca", "pt", "fr"]

props = Perluniprops()


def ranges(chars):
    cps = sorted(set(ord(c) for c in chars))
    out = []
    start = prev = cps[0]
    for cp in cps[1:]:
        if cp != prev + 1:
            out.append((start, prev))
            start = cp
        prev = cp
    out.append((start, prev))
    return out


def table(name, chars):
    rows = ranges(chars)
    lines = ["pub(crate) static %s: &[(u32, u32)] = &[" % name]
    for lo, hi in rows:
        lines.append("    (0x%04X, 0x%04X)," % (lo, hi))
    lines.append("];")
    return "\n".join(lines)


def main():
    extra = "".join(VIRAMAS) + "".join(NUKTAS)
    sets = [
        ("ALNUM", "".join(props.chars("IsAlnum")) + extra),
        ("ALPHA", "".join(props.chars("IsAlpha")) + extra),
        ("NUMBER", "".join(props.chars("IsN"))),
        ("LOWER", "".join(props.chars("IsLower"))),
        ("CURRENCY", "".join(props.chars("IsSc"))),
        ("SYMBOL_OTHER", "".join(props.chars("IsSo"))),
    ]
    body = [
        "// @generated by scripts/gen_tables.py; do not edit by hand.",
        "",
        "// Inclusive code point ranges, sorted and non-overlapping.",
        "",
    ]
    for name, chars in sets:
        body.append(table(name, chars))
        body.append("")
    with open(os.path.join(CORE, "src", "tokenizer", "tables.rs"), "w") as f:
        f.write("\n".join(body))

    for lang in LANGS:
        data = NONBREAKING_PREFIXES["nonbreaking_prefix." + lang]
        with open(os.path.join(CORE, "data", "nonbreaking_prefix." + lang), "w") as f:
            f.write(data)


if __name__ == "__main__":
    main()
