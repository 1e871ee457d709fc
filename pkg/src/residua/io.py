"""Reading and writing the plain-text group file format, and the bundled corpus.

    # comment
    degree: 4
    gen: (1 2)
    gen: (1 2 3 4)
    sub: (1 2)
"""

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError
from .groups import PermGroup
from .perm import Permutation, format_cycles, parse_cycles


@dataclass
class GroupFile:
    group: PermGroup
    sub: PermGroup = None
    path: str = None
    comments: list = field(default_factory=list)


def parse_group_text(text, path=None):
    degree = None
    gens = []
    subs = []
    comments = []
    where = path or "<input>"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        if comment.strip() and not line.strip():
            comments.append(comment.strip())
        line = line.strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise InputError(f"{where}:{lineno}: expected 'key: value', got {line!r}")
        value = value.strip()
        try:
            if key == "degree":
                if degree is not None:
                    raise InputError("degree given twice")
                try:
                    degree = int(value)
                except ValueError:
                    raise InputError(f"degree must be an integer, got {value!r}") from None
                if degree < 1:
                    raise InputError(f"degree must be positive, got {degree}")
            elif key in ("gen", "sub"):
                if value == "()":
                    cycles = []
                else:
                    cycles = parse_cycles(value)
                (gens if key == "gen" else subs).append((lineno, cycles))
            else:
                raise InputError(f"unknown key {key!r}")
        except InputError as e:
            raise InputError(f"{where}:{lineno}: {e}") from None
    if degree is None:
        points = [x for _, cs in gens + subs for c in cs for x in c]
        if not points:
            raise InputError(f"{where}: no 'degree:' line and no points to infer it from")
        degree = max(points)

    def build(items):
        out = []
        for lineno, cycles in items:
            try:
                out.append(Permutation.from_cycles(cycles, degree))
            except InputError as e:
                raise InputError(f"{where}:{lineno}: {e}") from None
        return out

    G = PermGroup(degree, build(gens))
    sub = None
    if subs:
        sub = PermGroup(degree, build(subs))
        if not sub.is_subgroup_of(G):
            raise InputError(f"{where}: the 'sub:' generators do not lie in the group")
    return GroupFile(G, sub, path, comments)


def read_group_file(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8 text") from None
    return parse_group_text(text, str(path))


def format_group_file(G, sub=None, comment=None):
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(f"degree: {G.degree}")
    gens = G.generators or (Permutation.identity(G.degree),)
    lines += [f"gen: {format_cycles(g)}" for g in gens]
    if sub is not None:
        sgens = sub.generators or (Permutation.identity(G.degree),)
        lines += [f"sub: {format_cycles(g)}" for g in sgens]
    return "\n".join(lines) + "\n"


def parse_subgroup(text, degree, where="--sub"):
    """Generators separated by ';' or ',' between cycles, e.g. '(1 2)(3 4); (1 3)(2 4)'."""
    parts = [p.strip() for p in text.replace(";", "\n").splitlines() if p.strip()]
    gens = []
    for part in parts:
        try:
            cycles = [] if part == "()" else parse_cycles(part)
            gens.append(Permutation.from_cycles(cycles, degree))
        except InputError as e:
            raise InputError(f"{where}: {e}") from None
    return PermGroup(degree, gens)


# -- bundled corpus -------------------------------------------------------------

CORPUS_DIR = Path(__file__).parent / "corpus"


def corpus_names():
    return sorted(p.stem for p in CORPUS_DIR.glob("*.grp"))


def corpus_path(name):
    return CORPUS_DIR / f"{name}.grp"


def load_corpus(name):
    return read_group_file(corpus_path(name))


def load_expected(name):
    path = CORPUS_DIR / f"{name}.expected.json"
    return json.loads(path.read_text(encoding="utf-8"))
