import pytest

from asyncbool import Network

# the running example network: two coordinates, one fixed point (10) and
# one two-state cycle {01, 11}
NET1_ROWS = [(0b00, 0b11), (0b01, 0b11), (0b10, 0b10), (0b11, 0b01)]

NET1_TABLE_TEXT = """\
n=2
00 -> 11
01 -> 11
10 -> 10
11 -> 01
"""


@pytest.fixture
def net1() -> Network:
    return Network.from_rows(2, NET1_ROWS)


@pytest.fixture
def id2() -> Network:
    """The identity network on two coordinates: every state is fixed."""
    return Network(2, (0, 1, 2, 3))


def all_networks(n: int):
    """Every truth table of dimension n (use only for n <= 2)."""
    import itertools

    for table in itertools.product(range(1 << n), repeat=1 << n):
        yield Network(n, table)
