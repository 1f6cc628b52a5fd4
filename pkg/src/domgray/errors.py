"""Exceptions shared across the package."""


class BudgetExceededError(Exception):
    """An enumeration or search outgrew its configured budget."""

    def __init__(self, message, *, spent=None, budget=None):
        super().__init__(message)
        self.spent = spent
        self.budget = budget


class NotReducibleError(ValueError):
    """A unicyclic graph cannot be reduced to its cycle.

    Carries the attachment vertex on the cycle and the vertices of the
    pendant tree that blocked the reduction.
    """

    def __init__(self, attachment, tree_vertices):
        self.attachment = attachment
        self.tree_vertices = tuple(sorted(tree_vertices))
        super().__init__(
            f"pendant tree at cycle vertex {attachment} is not reducible "
            f"(remaining vertices {list(self.tree_vertices)})"
        )


class ConstructionError(RuntimeError):
    """An internal invariant of a path construction failed.

    Raised instead of silently emitting a bad path; seeing this means a
    classifier or splice rule is wrong, not that the input is bad.
    """
