"""``scatlib`` command line.

Words are ASCII tokens whose characters are ranked (a < b < ...), or with
``--ints`` comma-separated positive integers. All words of one invocation
share a symbol table. ``--sigma N`` switches to the fixed alphabet
{1..N}: ASCII letters then mean a=1, b=2, ... and integers are taken as is.

Exit codes: 0 success, 1 a negative answer from ``equiv``, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import arch, concat, oracle, powers, simon, trim
from .core import Alphabet, MorphicPermutation, Word, WordError, normalize_many


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict
    result: dict
    timing_us: int = 0
    text: str = ""
    code: int = 0

    def as_json(self) -> str:
        return json.dumps(
            {"command": self.command, "inputs": self.inputs, "result": self.result, "timing_us": self.timing_us}
        )


class Codec:
    """Turns command-line tokens into words and words back into tokens."""

    def __init__(self, ints: bool, sigma: int | None):
        self.ints = ints
        self.sigma = sigma
        self.alphabet = Alphabet(sigma) if sigma else None
        self.sep = "," if ints else ""

    def split(self, token: str) -> list:
        if not self.ints:
            return list(token)
        if token.strip() == "":
            return []
        try:
            values = [int(part) for part in token.split(",")]
        except ValueError:
            raise UsageError(f"malformed integer word {token!r}") from None
        if any(v < 1 for v in values):
            raise UsageError(f"letters must be positive in {token!r}")
        return values

    def words(self, tokens: list[str]) -> list[Word]:
        raws = [self.split(t) for t in tokens]
        if self.sigma is None:
            words, _ = normalize_many(raws)
            return words
        out = []
        for raw in raws:
            if self.ints:
                ids = raw
            else:
                if any(not ("a" <= ch <= "z") for ch in raw):
                    raise UsageError("with --sigma, ASCII words use the letters a..z")
                ids = [ord(ch) - ord("a") + 1 for ch in raw]
            if ids and max(ids) > self.sigma:
                raise UsageError(f"letter {max(ids)} outside alphabet of size {self.sigma}")
            out.append(Word(ids, self.alphabet))
        return out

    def show(self, w: Word) -> str:
        if self.ints and self.sigma is not None:
            return w.to_ints()
        return w.to_text(self.sep)


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


# handlers: (args, codec, tokens) -> (result dict, text, exit code)


def _one(codec, tokens, n=1):
    if len(tokens) != n:
        raise UsageError(f"expected {n} word(s), got {len(tokens)}")
    return codec.words(tokens)


def cmd_nf(args, codec, tokens):
    (w,) = _one(codec, tokens)
    if not 1 <= args.k <= len(w):
        raise UsageError(f"k must lie in [1, {len(w)}], got {args.k}")
    nf = simon.shortlex_normal_form(w, args.k).word
    return {"normal_form": codec.show(nf), "length": len(nf)}, codec.show(nf), 0


def cmd_equiv(args, codec, tokens):
    w1, w2 = _one(codec, tokens, 2)
    if args.k < 0:
        raise UsageError("k must be nonnegative")
    same = simon.equiv_k(w1, w2, args.k)
    return {"equivalent": same}, "equivalent" if same else "not equivalent", 0 if same else 1


def cmd_distinguish(args, codec, tokens):
    w1, w2 = _one(codec, tokens, 2)
    k = simon.smallest_distinguishing_k(w1, w2)
    return {"k": k}, "congruent" if k is None else str(k), 0


def cmd_iota(args, codec, tokens):
    (w,) = _one(codec, tokens)
    value = arch.iota(w, codec.alphabet)
    return {"iota": value}, str(value), 0


def cmd_arch(args, codec, tokens):
    (w,) = _one(codec, tokens)
    f = arch.arch_factorize(w, codec.alphabet)
    z = arch.zeta(w, codec.alphabet)
    arches = [codec.show(a) for a in f.arches()]
    rest = codec.show(f.rest())
    marker = codec.show(f.marker)
    dotted = ".".join(arches + ([rest] if len(f.rest()) else []))
    result = {"arches": arches, "rest": rest, "iota": f.iota, "zeta": z, "marker": marker}
    text = f"{dotted}\niota {f.iota}\nzeta {z}\nmarker {marker}"
    return result, text, 0


def cmd_zeta(args, codec, tokens):
    (w,) = _one(codec, tokens)
    z, split = arch.zeta_with_witness(w, codec.alphabet)
    return {"zeta": z, "split": split}, f"{z} (split after {split})", 0


def cmd_min_power(args, codec, tokens):
    (w,) = _one(codec, tokens)
    value = powers.min_power_for_k(w, args.k, codec.alphabet)
    return {"ell": value}, str(value), 0


def cmd_iota_power(args, codec, tokens):
    (w,) = _one(codec, tokens)
    value = powers.iota_of_power(w, args.s, codec.alphabet)
    return {"iota": value}, str(value), 0


def cmd_pal_iota(args, codec, tokens):
    (w,) = _one(codec, tokens)
    value = powers.palindrome_iota(w, codec.alphabet)
    return {"iota": value}, str(value), 0


def cmd_perm_double(args, codec, tokens):
    if len(tokens) != 1:
        raise UsageError("expected 1 word")
    images = codec.split(args.pi) if codec.ints else [s for s in args.pi.split(",") if s]
    if codec.sigma is None:
        words, table = normalize_many([codec.split(tokens[0]), images])
        w, image_word = words
        if len(images) != len(table):
            raise UsageError(f"--pi must list the image of each of the {len(table)} symbols {table}")
        alphabet = None
    else:
        w = codec.words(tokens)[0]
        image_word = codec.words([codec.sep.join(map(str, images)) if codec.ints else "".join(images)])[0]
        if len(images) != codec.sigma:
            raise UsageError(f"--pi must list {codec.sigma} images")
        alphabet = codec.alphabet
    pi = MorphicPermutation(image_word.letters)
    res = powers.permutation_double_iota(w, pi, alphabet)
    return {"iota": res.iota, "iota_w": res.iota_w, "rests_cover": res.rests_cover}, str(res.iota), 0


def cmd_min_concat(args, codec, tokens):
    if len(tokens) != 1:
        raise UsageError("expected one file of words")
    path = tokens[0]
    try:
        handle = sys.stdin if path == "-" else open(path, encoding="utf-8")
        with handle:
            lines = [line.strip() for line in handle]
    except OSError as exc:
        raise UsageError(str(exc)) from None
    lines = [line for line in lines if line]
    if not lines:
        raise UsageError("no words given")
    ws = concat.WordSet(tuple(codec.words(lines)), codec.alphabet)
    cap = None if args.sigma_cap < 0 else args.sigma_cap
    ell = concat.min_concat(ws, args.k, args.mode, cap)
    result = {"ell": ell}
    text = str(ell)
    if args.witness_bound:
        f = concat.witness_bound(ell)
        result["witness_bound"] = f
        text += f"\nf {f}"
    return result, text, 0


def cmd_trim(args, codec, tokens):
    (w,) = _one(codec, tokens)
    d = trim.shortest_deletion(w, args.ell, args.side, codec.alphabet)
    result = {"side": d.side, "deleted": d.length, "kept_start": d.kept_start, "kept_end": d.kept_end}
    return result, f"delete {d.length} from {d.side}, keep [{d.kept_start}..{d.kept_end}]", 0


def cmd_uncommon_square(args, codec, tokens):
    (w,) = _one(codec, tokens)
    u = simon.uncommon_square_witness(w, codec.alphabet)
    return {"witness": codec.show(u), "length": len(u)}, codec.show(u), 0


def cmd_oracle(args, codec, tokens):
    op = args.op
    if op == "scatfact":
        (w,) = _one(codec, tokens)
        spectrum = oracle.scatfact_k(w, args.k)
        members = [codec.show(Word(m, w.alphabet)) for m in spectrum.sorted()]
        return {"k": args.k, "members": members}, " ".join(members), 0
    if op == "equiv":
        w1, w2 = _one(codec, tokens, 2)
        same = oracle.equiv_oracle(w1, w2, args.k)
        return {"equivalent": same}, "equivalent" if same else "not equivalent", 0 if same else 1
    if op == "iota":
        (w,) = _one(codec, tokens)
        value = oracle.iota_oracle(w, codec.alphabet)
        return {"iota": value}, str(value), 0
    w1, w2 = _one(codec, tokens, 2)
    found = oracle.shortest_uncommon_oracle(w1, w2)
    if found is None:
        return {"witness": None, "length": None}, "none", 0
    u, length = found
    return {"witness": codec.show(u), "length": length}, f"{codec.show(u)} ({length})", 0


HANDLERS = {
    "nf": cmd_nf,
    "equiv": cmd_equiv,
    "distinguish": cmd_distinguish,
    "iota": cmd_iota,
    "arch": cmd_arch,
    "zeta": cmd_zeta,
    "min-power": cmd_min_power,
    "iota-power": cmd_iota_power,
    "pal-iota": cmd_pal_iota,
    "perm-double": cmd_perm_double,
    "min-concat": cmd_min_concat,
    "trim": cmd_trim,
    "uncommon-square": cmd_uncommon_square,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON record per result")
    common.add_argument("--ints", action="store_true", help="words are comma-separated integers")
    common.add_argument("--sigma", type=_int, default=None, help="use the fixed alphabet {1..N}")

    parser = argparse.ArgumentParser(prog="scatlib", description="Scattered-factor universality tools.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_text, nwords=1, label="word"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("words", nargs=nwords, metavar=label, help="word(s), or - to read lines from stdin")
        return p

    add("nf", "shortlex normal form under ~k").add_argument("--k", type=_int, required=True)
    add("equiv", "test w1 ~k w2", "+").add_argument("--k", type=_int, required=True)
    add("distinguish", "least k separating two words", "+")
    add("iota", "universality index")
    add("arch", "arch factorization with iota, zeta and marker")
    add("zeta", "circular universality index")
    add("min-power", "least l with w^l k-universal").add_argument("--k", type=_int, required=True)
    add("iota-power", "iota(w^s)").add_argument("--s", type=_int, required=True)
    add("pal-iota", "iota of a palindrome from its first half")
    add("perm-double", "iota(w pi(w))").add_argument("--pi", required=True, help="images of the sorted symbols, e.g. c,b,a")
    p = add("min-concat", "fewest words to concatenate for k-universality", 1, "file")
    p.add_argument("--k", type=_int, required=True)
    p.add_argument("--mode", choices=["auto", "general", "universal", "binary"], default="auto")
    p.add_argument("--witness-bound", action="store_true", help="also print f with 2^(f-1) < l <= 2^f")
    p.add_argument("--sigma-cap", type=_int, default=concat.DEFAULT_SIGMA_CAP, help="alphabet guard; -1 lifts it")
    p = add("trim", "shortest prefix/suffix deletion to reach index ell")
    p.add_argument("--ell", type=_int, required=True)
    p.add_argument("--side", choices=["prefix", "suffix"], default="suffix")
    add("uncommon-square", "shortest scattered factor of ww missing from w")
    p = sub.add_parser("oracle", parents=[common], help="brute-force reference answers (small inputs)")
    p.add_argument("op", choices=["scatfact", "equiv", "iota", "uncommon"])
    p.add_argument("words", nargs="+", metavar="word")
    p.add_argument("--k", type=_int, default=None)
    return parser


def _run(args, codec, tokens) -> OutputRecord:
    handler = HANDLERS[args.command]
    start = time.perf_counter_ns()
    result, text, code = handler(args, codec, tokens)
    elapsed = (time.perf_counter_ns() - start) // 1000
    inputs = {"words": list(tokens)}
    for key in ("k", "s", "ell", "side", "pi", "mode", "op"):
        if getattr(args, key, None) is not None:
            inputs[key] = getattr(args, key)
    return OutputRecord(args.command, inputs, result, elapsed, text, code)


def _batches(args) -> list[list[str]]:
    tokens = list(args.words)
    if tokens == ["-"] and args.command != "min-concat":
        return [line.split() for line in sys.stdin.read().splitlines() if line.strip()]
    return [tokens]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle" and args.op in ("scatfact", "equiv") and args.k is None:
        parser.error(f"oracle {args.op} needs --k")
    if args.sigma is not None and args.sigma < 1:
        parser.error("--sigma must be positive")
    codec = Codec(args.ints, args.sigma)
    worst = 0
    for tokens in _batches(args):
        try:
            record = _run(args, codec, tokens)
        except (UsageError, WordError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            worst = 2
            continue
        print(record.as_json() if args.json else record.text)
        worst = max(worst, record.code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
