import re
import math
import hashlib

import numpy as np

from config import GAIN_DIGITS

WEIGHT_SCHEMES = ("uniform-ic", "trivalency", "weighted-cascade")


def parse_weight_scheme(scheme_str):
    """
    Parse a weight scheme flag into (scheme, p).
    Examples:
        "uniform:0.1" -> ("uniform-ic", 0.1)
        "trivalency" -> ("trivalency", None)
        "wc" -> ("weighted-cascade", None)
    """
    if not scheme_str:
        raise ValueError("weight scheme is empty")

    text = scheme_str.strip().lower()

    match = re.fullmatch(r'(?:uniform|uniform-ic):([0-9]*\.?[0-9]+(?:e-?[0-9]+)?)', text)
    if match:
        p = float(match.group(1))
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"uniform probability must be in [0, 1], got {p}")
        return "uniform-ic", p

    if text in ("trivalency", "tri"):
        return "trivalency", None
    if text in ("wc", "weighted-cascade"):
        return "weighted-cascade", None

    raise ValueError(f"unknown weight scheme: {scheme_str!r}")


def parse_k_list(k_str):
    """
    Parse a budget list.
    Examples:
        "1,5,10" -> [1, 5, 10]
        "3" -> [3]
    """
    if k_str is None or not str(k_str).strip():
        raise ValueError("k list is empty")

    values = []
    for token in re.split(r'[,\s]+', str(k_str).strip()):
        if not token:
            continue
        if not re.fullmatch(r'\d+', token):
            raise ValueError(f"k must be a non-negative integer, got {token!r}")
        values.append(int(token))
    return values


def parse_name_list(names_str):
    """Split a comma separated list of names, dropping blanks."""
    if not names_str:
        return []
    return [name.strip() for name in names_str.split(',') if name.strip()]


def read_seed_labels(text):
    """
    Read node labels from a seeds file: whitespace separated, `#` comments.
    Examples:
        "0 3\n# note\n7" -> ["0", "3", "7"]
    """
    labels = []
    for line in text.splitlines():
        line = line.split('#', 1)[0]
        labels.extend(line.split())
    return labels


def git_blob_hash(content: bytes) -> str:
    """Content hash in the same form git uses for blobs."""
    header = f"blob {len(content)}\0".encode()
    return hashlib.sha1(header + content).hexdigest()


def round_gain(value: float) -> float:
    """Round a marginal gain so float noise does not decide ties."""
    return round(value, GAIN_DIGITS)


def standard_error(values) -> float:
    """Sample standard deviation over sqrt(count); 0 for fewer than two values."""
    values = np.asarray(values, dtype=float)
    if values.size < 2:
        return 0.0
    return float(np.std(values, ddof=1) / math.sqrt(values.size))
