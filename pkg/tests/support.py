import os
import unittest

import networkx as nx

from codec import to_networkx

SEED = 20240229

slow = unittest.skipUnless(os.environ.get("WIENER_SLOW_TESTS"), "set WIENER_SLOW_TESTS=1 for long-running cases")


def nx_wiener(g) -> int:
    return int(round(nx.wiener_index(to_networkx(g))))
