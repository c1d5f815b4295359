"""Small frameworks used across the test suite.

Each function builds a fresh framework so tests can never share mutable
state through identity-tagged argument sets.
"""

from argsolve import Framework, build_framework


def empty() -> Framework:
    return build_framework([], [])


def trivial_pair() -> Framework:
    return build_framework(["a", "b"], [])


def nixon_diamond() -> Framework:
    # two arguments attacking each other
    return build_framework(["a", "b"], [("a", "b"), ("b", "a")])


def single_attack() -> Framework:
    return build_framework(["a", "b"], [("a", "b")])


def simple_reinstatement() -> Framework:
    # chain c -> b -> a
    return build_framework(["a", "b", "c"], [("b", "a"), ("c", "b")])


def double_reinstatement() -> Framework:
    # b attacked twice, a reinstated twice over
    return build_framework(
        ["a", "b", "c", "e"], [("b", "a"), ("c", "b"), ("e", "b")]
    )


def mutual_pair_guarded() -> Framework:
    # a <-> b with c attacking b from outside
    return build_framework(["a", "b", "c"], [("a", "b"), ("b", "a"), ("c", "b")])


def chain_of_four() -> Framework:
    # e -> c -> b -> a
    return build_framework(["a", "b", "c", "e"], [("e", "c"), ("c", "b"), ("b", "a")])


def floating_reinstatement() -> Framework:
    return build_framework(
        ["a", "b", "c", "e"],
        [("a", "b"), ("b", "a"), ("a", "c"), ("b", "c"), ("c", "e")],
    )


def self_attack_pair() -> Framework:
    # a attacks itself and b
    return build_framework(["a", "b"], [("a", "a"), ("a", "b")])


def cycle_with_tail() -> Framework:
    # 3-cycle b -> e -> c -> b plus b -> a
    return build_framework(
        ["a", "b", "c", "e"], [("b", "a"), ("c", "b"), ("e", "c"), ("b", "e")]
    )


def loop_and_mutual() -> Framework:
    # self-attacking a in mutual conflict with b
    return build_framework(["a", "b"], [("a", "a"), ("a", "b"), ("b", "a")])


def mixed_five() -> Framework:
    # a -> b, c <-> f, c -> b, f -> e, e self-attacking
    return build_framework(
        ["a", "b", "c", "f", "e"],
        [("a", "b"), ("c", "b"), ("c", "f"), ("f", "c"), ("f", "e"), ("e", "e")],
    )


def defended_mutual_pair() -> Framework:
    # a -> b, b <-> c, c -> e; a reinstates c
    return build_framework(
        ["a", "b", "c", "e"], [("c", "b"), ("b", "c"), ("a", "b"), ("c", "e")]
    )


def half_defended_chain() -> Framework:
    # a -> b, b -> c, c <-> e, e -> f
    return build_framework(
        ["a", "b", "c", "e", "f"],
        [("e", "c"), ("c", "e"), ("b", "c"), ("e", "f"), ("a", "b")],
    )


def self_attack_blocker() -> Framework:
    # self-attacking a and b both attack c, c -> e
    return build_framework(
        ["a", "c", "b", "e"], [("a", "a"), ("a", "c"), ("b", "c"), ("c", "e")]
    )


def mutual_pair_with_odd_loop() -> Framework:
    # a <-> b, b -> c, 3-cycle c -> e -> f -> c
    return build_framework(
        ["a", "b", "c", "e", "f"],
        [("b", "a"), ("a", "b"), ("b", "c"), ("c", "e"), ("e", "f"), ("f", "c")],
    )


def transitive_triangle() -> Framework:
    # a -> b -> c with the shortcut a -> c
    return build_framework(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


def tailed_three_cycle() -> Framework:
    # 3-cycle a -> b -> c -> a with e -> a from outside
    return build_framework(
        ["a", "b", "c", "e"], [("a", "b"), ("b", "c"), ("c", "a"), ("e", "a")]
    )


def incoherent_six() -> Framework:
    return build_framework(
        ["a0", "a1", "a2", "a3", "a4", "a5"],
        [
            ("a0", "a4"),
            ("a4", "a0"),
            ("a0", "a5"),
            ("a1", "a0"),
            ("a1", "a3"),
            ("a2", "a3"),
            ("a3", "a2"),
            ("a2", "a4"),
            ("a4", "a2"),
            ("a3", "a0"),
            ("a3", "a5"),
            ("a4", "a3"),
            ("a5", "a1"),
        ],
    )


def incoherent_five() -> Framework:
    return build_framework(
        ["a0", "a1", "a2", "a3", "a4"],
        [
            ("a0", "a1"),
            ("a1", "a0"),
            ("a0", "a2"),
            ("a0", "a4"),
            ("a4", "a0"),
            ("a2", "a4"),
            ("a3", "a2"),
            ("a4", "a3"),
        ],
    )


def mutual_triangle_plus_isolated() -> Framework:
    # three arguments pairwise in mutual conflict, one untouched
    return build_framework(
        ["a0", "a1", "a2", "a3"],
        [
            ("a0", "a1"),
            ("a1", "a0"),
            ("a0", "a3"),
            ("a3", "a0"),
            ("a3", "a1"),
            ("a1", "a3"),
        ],
    )


def directed_cycle(n: int) -> Framework:
    """The directed cycle on n arguments, a1 -> a2 -> ... -> an -> a1."""
    names = [f"a{i}" for i in range(1, n + 1)]
    pairs = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return build_framework(names, pairs)
