from hwface.rootsystem import Weight


def nodes(*ones):
    """1-based node labels to a 0-based node set."""
    return frozenset(i - 1 for i in ones)


def W(*cs):
    return Weight(cs)
