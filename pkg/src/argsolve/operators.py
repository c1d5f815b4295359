"""The two set-valued operators of a framework and their fixed points.

``neutrality`` maps a set to the arguments it does not attack;
``defence`` maps a set to the arguments whose every attacker it attacks.
The defence operator is monotone, so iterating it from the empty set
climbs to its least fixed point, which is the grounded extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .core import (
    ArgSet,
    ArgumentId,
    Framework,
    _forward_mask,
    _require_tagged,
)


@dataclass(frozen=True)
class IterationTrace:
    """The chain of values produced by iterating an operator.

    ``steps`` holds the start value followed by each new value; the last
    entry repeats nothing. When ``converged`` is true, applying the
    iterated operator to the last step returns it unchanged.
    """

    steps: tuple[ArgSet, ...]
    converged: bool

    @property
    def fixpoint(self) -> ArgSet:
        return self.steps[-1]


def _neutrality_mask(framework: Framework, mask: int) -> int:
    return framework._full_mask & ~_forward_mask(framework, mask)


def _defence_mask(framework: Framework, mask: int) -> int:
    fwd = _forward_mask(framework, mask)
    pred = framework._pred_masks
    out = 0
    for i in range(len(framework.arguments)):
        if pred[i] & ~fwd == 0:
            out |= 1 << i
    return out


def neutrality(framework: Framework, members: ArgSet) -> ArgSet:
    """Arguments not attacked by the given set."""
    _require_tagged(framework, members)
    return ArgSet(framework, _neutrality_mask(framework, members.mask))


def defence(framework: Framework, members: ArgSet) -> ArgSet:
    """Arguments whose every attacker is attacked by the given set."""
    _require_tagged(framework, members)
    return ArgSet(framework, _defence_mask(framework, members.mask))


def neutrality_squared(framework: Framework, members: ArgSet) -> ArgSet:
    """The neutrality operator applied twice; pointwise equal to defence."""
    _require_tagged(framework, members)
    return ArgSet(
        framework,
        _neutrality_mask(framework, _neutrality_mask(framework, members.mask)),
    )


def defends(framework: Framework, members: ArgSet, arg: Union[ArgumentId, str]) -> bool:
    """Whether the set counterattacks every attacker of ``arg``."""
    _require_tagged(framework, members)
    resolved = framework.resolve(arg)
    fwd = _forward_mask(framework, members.mask)
    return framework._pred_masks[resolved.index] & ~fwd == 0


def kleene_least_fixpoint(framework: Framework) -> IterationTrace:
    """Iterate the defence operator from the empty set to its least fixed point.

    The final step is the grounded extension. Termination within
    ``len(framework) + 1`` applications is guaranteed because the chain is
    strictly ascending inside a finite powerset.
    """
    cap = len(framework.arguments) + 1
    steps = [0]
    current = 0
    for _ in range(cap):
        nxt = _defence_mask(framework, current)
        if nxt == current:
            return IterationTrace(
                tuple(ArgSet(framework, m) for m in steps), converged=True
            )
        steps.append(nxt)
        current = nxt
    raise AssertionError("defence iteration failed to stabilise within its bound")


# the two monotone operators; raw neutrality is antitone and stays out
_ITERABLE_FUNCTIONS: dict[Callable, Callable[[Framework, int], int]] = {
    defence: _defence_mask,
    neutrality_squared: lambda fw, m: _neutrality_mask(fw, _neutrality_mask(fw, m)),
}


def iterate_to_fixpoint(
    framework: Framework,
    start: ArgSet,
    fn: Callable[[Framework, ArgSet], ArgSet],
) -> IterationTrace:
    """Repeatedly apply a monotone operator until it stops changing.

    Only ``defence`` and ``neutrality_squared`` are accepted; raw
    ``neutrality`` is antitone and may oscillate forever, so it is
    rejected rather than silently looping. Iteration stops after two
    consecutive equal values or after ``len(framework) + 1`` applications,
    in which case ``converged`` is false.
    """
    _require_tagged(framework, start)
    try:
        mask_fn = _ITERABLE_FUNCTIONS[fn]
    except (KeyError, TypeError):
        raise ValueError(
            "iterate_to_fixpoint accepts only the monotone operators "
            "defence and neutrality_squared"
        ) from None

    cap = len(framework.arguments) + 1
    steps = [start.mask]
    current = start.mask
    converged = False
    for _ in range(cap):
        nxt = mask_fn(framework, current)
        if nxt == current:
            converged = True
            break
        steps.append(nxt)
        current = nxt
    if not converged and start.mask == 0:
        raise AssertionError("monotone iteration from the empty set must converge")
    return IterationTrace(tuple(ArgSet(framework, m) for m in steps), converged)
