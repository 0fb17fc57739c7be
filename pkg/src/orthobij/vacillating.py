"""Vacillating tableaux in highest-weight-word form.

A word of dimension k has letters in {0, +-1, ..., +-k}.  Every prefix s
must satisfy, writing #i for the number of letters i in s:

* #i - #(-i) >= 0,
* #i - #(-i) >= #(i+1) - #(-i-1) for i < k,
* if s ends with 0 then #k - #(-k) > 0.

The k-tuple-of-Riordan-paths view: letter +-i is an up or down step in
path i and a horizontal step in paths 1..i-1; letter 0 is horizontal in
every path.  The prefix conditions say exactly that every path stays on
or above the axis, path i never exceeds path i-1, and no path is ever
horizontal on the axis where it has a step.
"""

from __future__ import annotations

from .tableaux import normalize_partition


class InvalidWord(ValueError):
    """The letters do not form a valid vacillating tableau."""


class ShapeNotEmpty(ValueError):
    """Concatenation requires every block to close at the empty shape."""


def letters_in_range(letters, k: int) -> bool:
    return all(isinstance(x, int) and abs(x) <= k for x in letters)


def prefix_weights(letters, k: int):
    """Yield the weight vector after each letter, without validity checks."""
    weight = [0] * k
    for x in letters:
        if x != 0:
            weight[abs(x) - 1] += 1 if x > 0 else -1
        yield tuple(weight)


def validate(letters, k: int) -> bool:
    """All three prefix conditions."""
    if k < 1 or not letters_in_range(letters, k):
        return False
    weight = [0] * k
    for x in letters:
        if x != 0:
            weight[abs(x) - 1] += 1 if x > 0 else -1
        if x == 0 and weight[k - 1] <= 0:
            return False
        if any(weight[i] < 0 for i in range(k)):
            return False
        if any(weight[i] < weight[i + 1] for i in range(k - 1)):
            return False
    return True


def shape(letters, k: int) -> tuple[int, ...]:
    """Final weight of a valid word, as a partition."""
    if not validate(letters, k):
        raise InvalidWord(f"not a vacillating tableau for k={k}: {letters}")
    weight = [0] * k
    for x in letters:
        if x != 0:
            weight[abs(x) - 1] += 1 if x > 0 else -1
    return normalize_partition(weight)


def chain_position(x: int, k: int) -> int:
    """Position of a letter along 1 -> 2 -> ... -> k -> 0 -> -k -> ... -> -1."""
    if x > 0:
        return x - 1
    if x == 0:
        return k
    return 2 * k + 1 + x  # x negative: -k is k+1, -1 is 2k


def descent_set(letters, k: int) -> frozenset[int]:
    """Positions i whose letter strictly precedes the next one on the chain.

    The pair j followed by -j does not count while rows j and below are
    empty, that is when #j - #(-j) = 0 over the letters before position i.
    """
    if not validate(letters, k):
        raise InvalidWord(f"not a vacillating tableau for k={k}: {letters}")
    letters = tuple(letters)
    descents = set()
    weight = [0] * k
    for i in range(len(letters) - 1):
        a, b = letters[i], letters[i + 1]
        if chain_position(a, k) < chain_position(b, k):
            if a > 0 and b == -a and weight[a - 1] == 0:
                pass
            else:
                descents.add(i + 1)
        if a != 0:
            weight[abs(a) - 1] += 1 if a > 0 else -1
    return frozenset(descents)


def cut_away_suffix(mu) -> tuple[int, ...]:
    """The letter block (-l)^mu_l ... (-2)^mu_2 (-1)^mu_1."""
    mu = normalize_partition(mu)
    out = []
    for i in range(len(mu), 0, -1):
        out.extend([-i] * mu[i - 1])
    return tuple(out)


def has_cut_away_shape(letters, mu) -> bool:
    suffix = cut_away_suffix(mu)
    letters = tuple(letters)
    return suffix == letters[len(letters) - len(suffix):] if suffix else True


def max_cut_away(letters) -> tuple[int, ...]:
    """The largest partition mu whose cut-away block ends the word."""
    letters = tuple(letters)
    pos = len(letters)
    mu = []
    bound = None
    target = 1
    while pos > 0:
        run = 0
        while pos - run > 0 and letters[pos - run - 1] == -target:
            run += 1
        if bound is not None:
            run = min(run, bound)
        if run == 0:
            break
        mu.append(run)
        # a shorter block than available breaks the pattern for deeper letters
        if letters[pos - run - 1:pos - run] == (-target,):
            break
        bound = run
        pos -= run
        target += 1
    return normalize_partition(mu) if mu else ()


def concatenate(words, k: int) -> tuple[int, ...]:
    """Write shape-empty words side by side."""
    out = []
    for w in words:
        if shape(w, k) != ():
            raise ShapeNotEmpty(f"block has shape {shape(w, k)}: {w}")
        out.extend(w)
    return tuple(out)


def to_riordan(letters, k: int):
    """Render as k paths of (label, step) pairs; steps are 'u', 'd', 'h'."""
    if not validate(letters, k):
        raise InvalidWord(f"not a vacillating tableau for k={k}: {letters}")
    paths = []
    for p in range(1, k + 1):
        steps = []
        for label, x in enumerate(letters, start=1):
            if x == 0 or abs(x) > p:
                steps.append((label, "h"))
            elif x == p:
                steps.append((label, "u"))
            elif x == -p:
                steps.append((label, "d"))
        paths.append(tuple(steps))
    return tuple(paths)


def from_riordan(paths, r: int, k: int) -> tuple[int, ...]:
    letters = [0] * r
    for p, steps in enumerate(paths, start=1):
        for label, step in steps:
            if step == "u":
                letters[label - 1] = p
            elif step == "d":
                letters[label - 1] = -p
    return tuple(letters)


def enumerate_vacillating(r: int, k: int, target_shape=None):
    """All valid words of length r, depth first over the letter chain.

    With target_shape given, only words of that final shape are yielded.
    """
    if target_shape is not None:
        target_shape = normalize_partition(target_shape)
        if len(target_shape) > k:
            return
        target = list(target_shape) + [0] * (k - len(target_shape))
    else:
        target = None
    alphabet = list(range(1, k + 1)) + [0] + list(range(-k, 0))

    weight = [0] * k
    word: list[int] = []

    def feasible() -> bool:
        if target is None:
            return True
        need = sum(abs(weight[i] - target[i]) for i in range(k))
        return need <= r - len(word)

    def step():
        if len(word) == r:
            if target is None or weight == target:
                yield tuple(word)
            return
        for x in alphabet:
            if x == 0:
                if weight[k - 1] <= 0:
                    continue
            else:
                i = abs(x) - 1
                delta = 1 if x > 0 else -1
                new = weight[i] + delta
                if new < 0:
                    continue
                if delta > 0 and i > 0 and new > weight[i - 1]:
                    continue
                if delta < 0 and i < k - 1 and new < weight[i + 1]:
                    continue
                weight[i] = new
            word.append(x)
            if feasible():
                yield from step()
            word.pop()
            if x != 0:
                weight[abs(x) - 1] -= 1 if x > 0 else -1

    yield from step()


def word_to_json(letters, k: int):
    return {"k": k, "letters": list(letters)}


def word_from_json(data):
    return int(data["k"]), tuple(int(x) for x in data["letters"])
