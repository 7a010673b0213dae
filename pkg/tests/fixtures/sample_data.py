"""
Sample data fixtures for testing.

This module contains raw JSON-shaped documents used by the file-based CLI tests.
"""

Z3_GROUP = {"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}

Z2_GROUP = {"order": 2, "table": [[0, 1], [1, 0]]}

# Element 0 is not an identity
BROKEN_GROUP = {"order": 2, "table": [[1, 0], [0, 1]]}

# g t g t^-1 g t
BASIC_WORD = {"letters": [{"g": 1}, {"t": 1}, {"g": 1}, {"t": -1}, {"g": 1}, {"t": 1}]}

# g t g t^-1 t^-1 g t t
DIGON_WORD = {"letters": [
    {"g": 1}, {"t": 1}, {"g": 1}, {"t": -1}, {"t": -1}, {"g": 1}, {"t": 1}, {"t": 1},
]}

# g t
FREE_PRODUCT_WORD = {"letters": [{"g": 1}, {"t": 1}]}

# g t t
NOT_UNIMODULAR_WORD = {"letters": [{"g": 1}, {"t": 1}, {"t": 1}]}

BAD_STABLE_WORD = {"letters": [{"g": 1}, {"t": 2}]}

# Element 5 lies outside Z3
OUT_OF_GROUP_WORD = {"letters": [{"g": 5}, {"t": 1}, {"g": 1}, {"t": -1}, {"g": 1}, {"t": 1}]}

BASIC_PRESENTATION = {
    "s": 0,
    "m": 0,
    "k": 2,
    "c": [{"copy": 0, "g": 1}],
    "a": [[{"copy": 0, "g": 1}]],
    "b": [[{"copy": 0, "g": 1}]],
    "group": Z3_GROUP,
}

K1_PRESENTATION = dict(BASIC_PRESENTATION, k=1)

# Torus square with every corner labelled g
TORUS_DIAGRAM = {
    "darts": 4,
    "theta": [2, 3, 0, 1],
    "faces": [[0, 1, 2, 3]],
    "edgeForward": [0, 1],
    "cornerLabels": [[[{"copy": 0, "g": 1}]] * 4],
    "exteriorFaces": [],
    "exteriorVertices": [],
}

# theta fixes dart 0
FIXED_POINT_DIAGRAM = dict(TORUS_DIAGRAM, theta=[0, 3, 2, 1])
