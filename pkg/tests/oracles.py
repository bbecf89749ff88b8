"""Expected values transcribed by hand from published displays.

Strings keep the printed notation; :func:`tex` turns it into the package's
polynomial syntax.  Two rewrites are needed: two-digit subscripts ``q_{12}``
mean ``q_{1,2}``, and LaTeX spacing ``\\ `` is dropped.
"""

import re

from ncsf.compositions import Composition
from ncsf.polyring import parse_poly, parse_ratfunc


def tex(text: str) -> str:
    text = text.replace("\\ ", "")
    return re.sub(r"([qt])_\{(\d)(\d)\}", r"\1_{\2,\3}", text)


def poly(text: str):
    return parse_poly(tex(text))


def frac(text: str):
    return parse_ratfunc(tex(text))


def comp(text: str) -> Composition:
    return Composition(int(c) for c in text)


# Generic Kostka matrix, n = 4, rows and columns in canonical order.
GENERIC_KOSTKA_4 = [
    ["1", "y_{000}", "y_{00}", "y_{00}y_{000}", "y_0", "y_0y_{000}", "y_0y_{00}", "y_0y_{00}y_{000}"],
    ["1", "y_{001}", "y_{00}", "y_{00}y_{001}", "y_0", "y_0y_{001}", "y_0y_{00}", "y_0y_{00}y_{001}"],
    ["1", "y_{010}", "y_{01}", "y_{01}y_{010}", "y_0", "y_0y_{010}", "y_0y_{01}", "y_0y_{01}y_{010}"],
    ["1", "y_{011}", "y_{01}", "y_{01}y_{011}", "y_0", "y_0y_{011}", "y_0y_{01}", "y_0y_{01}y_{011}"],
    ["1", "y_{100}", "y_{10}", "y_{10}y_{100}", "y_1", "y_1y_{100}", "y_1y_{10}", "y_1y_{10}y_{100}"],
    ["1", "y_{101}", "y_{10}", "y_{10}y_{101}", "y_1", "y_1y_{101}", "y_1y_{10}", "y_1y_{10}y_{101}"],
    ["1", "y_{110}", "y_{11}", "y_{11}y_{110}", "y_1", "y_1y_{110}", "y_1y_{11}", "y_1y_{11}y_{110}"],
    ["1", "y_{111}", "y_{11}", "y_{11}y_{111}", "y_1", "y_1y_{111}", "y_1y_{11}", "y_1y_{11}y_{111}"],
]

P211_RIBBONS = {
    "4": "1", "31": "y_{011}", "22": "y_{01}", "211": "y_{01}y_{011}",
    "13": "y_0", "121": "y_0y_{011}", "112": "y_0y_{01}", "1111": "y_0y_{01}y_{011}",
}

DET_GENERIC_4 = ("(y_1-y_0)^4 (y_{01}-y_{00})^2 (y_{11}-y_{10})^2"
                 "(y_{001}-y_{000}) (y_{011}-y_{010}) (y_{101}-y_{100}) (y_{111}-y_{110})")

K_3 = [
    ["1", "q_{12}", "q_{11}", "q_{11} q_{12}"],
    ["1", "t_{12}", "q_{11}", "q_{11} t_{12}"],
    ["1", "q_{21\\ }", "t_{11}", "q_{21} t_{11}"],
    ["1", "t_{21}", "t_{11}", "t_{11} t_{21}"],
]

K_4 = [
    ["1", "q_{13}", "q_{12}", "q_{12} q_{13}", "q_{11}", "q_{11} q_{13}", "q_{11} q_{12}", "q_{11} q_{12} q_{13}"],
    ["1", "t_{13}", "q_{12}", "q_{12} t_{13}", "q_{11}", "q_{11} t_{13}", "q_{11} q_{12}", "q_{11} q_{12} t_{13}"],
    ["1", "q_{22}", "t_{12}", "q_{22} t_{12}", "q_{11}", "q_{11} q_{22}", "q_{11} t_{12}", "q_{11} q_{22} t_{12}"],
    ["1", "t_{22}", "t_{12}", "t_{12} t_{22}", "q_{11}", "q_{11} t_{22}", "q_{11} t_{12}", "q_{11} t_{12} t_{22}"],
    ["1", "q_{22}", "q_{21}", "q_{21} q_{22}", "t_{11}", "q_{22} t_{11}", "q_{21} t_{11}", "q_{21} q_{22} t_{11}"],
    ["1", "t_{22}", "q_{21}", "q_{21} t_{22}", "t_{11}", "t_{11} t_{22}", "q_{21} t_{11}", "q_{21} t_{11} t_{22}"],
    ["1", "q_{31}", "t_{21}", "q_{31} t_{21}", "t_{11}", "q_{31} t_{11}", "t_{11} t_{21}", "q_{31} t_{11} t_{21}"],
    ["1", "t_{31}", "t_{21}", "t_{21} t_{31}", "t_{11}", "t_{11} t_{31}", "t_{11} t_{21}", "t_{11} t_{21} t_{31}"],
]

DET_QT_4 = ("(q_{11} - t_{11})^4 (q_{12} - t_{12})^2  (q_{21} - t_{21})^2"
            "(q_{22} - t_{22})^2  (q_{13} - t_{13})  (q_{31} - t_{31})")

# products: (family, left, right, {composition: coefficient})
PRODUCTS = {
    "P2 P2": ("generic", "2", "2", {
        "4": "(y_{01}-1)(y_{001}-y_0)/((y_{01}-y_{00})(y_{001}-y_{000}))",
        "31": "(y_{01}-1)(y_{000}-y_0)/((y_{01}-y_{00})(y_{000}-y_{001}))",
        "22": "(y_{00}-1)(y_{011}-y_0)/((y_{00}-y_{01})(y_{011}-y_{010}))",
        "211": "(y_{00}-1)(y_{010}-y_0)/((y_{00}-y_{01})(y_{010}-y_{011}))",
    }),
    "P11 P11": ("generic", "11", "11", {
        "13": "(y_{11}-1)(y_{101}-y_1)/((y_{11}-y_{10})(y_{101}-y_{100}))",
        "121": "(y_{11}-1)(y_{100}-y_1)/((y_{11}-y_{10})(y_{100}-y_{101}))",
        "112": "(y_{10}-1)(y_{111}-y_1)/((y_{10}-y_{11})(y_{111}-y_{110}))",
        "1111": "(y_{10}-1)(y_{110}-y_1)/((y_{10}-y_{11})(y_{110}-y_{111}))",
    }),
    "H2 H2 (qt)": ("qt", "2", "2", {
        "4": "(t_{12}-1)(t_{13}-q_{11})/((t_{12}-q_{12})(t_{13}-q_{13}))",
        "31": "(t_{12}-1)(q_{13}-q_{11})/((t_{12}-q_{12})(q_{13}-t_{13}))",
        "22": "(q_{12}-1)(t_{22}-q_{11})/((q_{12}-t_{12})(t_{22}-q_{22}))",
        "211": "(q_{12}-1)(q_{22}-q_{11})/((q_{12}-t_{12})(q_{22}-t_{22}))",
    }),
    "H11 H11 (qt)": ("qt", "11", "11", {
        "13": "(t_{21}-1)(t_{22}-t_{11})/((t_{21}-q_{21})(t_{22}-q_{22}))",
        "121": "(t_{21}-1)(q_{22}-t_{11})/((t_{21}-q_{21})(q_{22}-t_{22}))",
        "112": "(q_{21}-1)(t_{31}-t_{11})/((q_{21}-t_{21})(t_{31}-q_{31}))",
        "1111": "(q_{21}-1)(q_{31}-t_{11})/((q_{21}-t_{21})(q_{31}-t_{31}))",
    }),
    "H2 H2 (bz)": ("bz", "2", "2", {
        "4": "(t_2-1)(t_1-q_1)/((t_2-q_2)(t_1-q_3))",
        "31": "(t_2-1)(q_3-q_1)/((t_2-q_2)(q_3-t_1))",
        "22": "(q_2-1)(t_1-q_1)/((q_2-t_2)(t_1-q_3))",
        "211": "(q_2-1)(q_3-q_1)/((q_2-t_2)(q_3-t_1))",
    }),
    "H11 H11 (bz)": ("bz", "11", "11", {
        "31": "(t_2-1)(t_3-t_1)/((t_2-q_2)(t_3-q_1))",
        "211": "(q_2-1)(t_3-t_1)/((q_2-t_2)(t_3-q_1))",
        "121": "(t_2-1)(q_1-t_1)/((t_2-q_2)(q_1-t_3))",
        "1111": "(q_2-1)(q_1-t_1)/((q_2-t_2)(q_1-t_3))",
    }),
}

PHI_WORD = "22135411"
PHI_SIGMA = "54368721"
PHI_VALUE = "q_1q_2t_5q_4t_1"

W_AT_ONES = [1, 3, 13, 75, 541]

# ribbon pair, I = 211: scalar parts of W (entry (i, j) multiplies S_{j-i+1})
R211_W = [[1, 1, 1, 1], [-1, 0, 0, 0], [0, -1, -1, -1], [0, 0, -1, -1]]
R211_S = {"4": 1, "31": -1, "22": -1, "211": 1}

# H'_I(U, V) / (x - y) for the factoring family at n = 3
FACTORING_N3 = {
    "3": {
        "3": "(x-aq_1y)(x-aq_2y)",
        "21": "(x-aq_1y)(aq_2x-y)",
        "12": "a(x-y)(q_1x-q_2y)",
        "111": "(aq_1x-y)(aq_2x-y)",
    },
    "21": {
        "3": "(x-aq_1y)(bu_1x-y)",
        "21": "(x-aq_1y)(x-bu_1y)",
        "12": "(abq_1u_1x-y)(x-y)",
        "111": "(aq_1x-y)(x-bu_1y)",
    },
    "12": {
        "3": "(x-aq_2y)(bu_2x-y)",
        "21": "(aq_2x-y)(bu_2x-y)",
        "12": "(x-abq_2u_2y)(x-y)",
        "111": "(aq_2x-y)(x-bu_2y)",
    },
    "111": {
        "3": "(bu_1x-y)(bu_2x-y)",
        "21": "(x-bu_1y)(bu_2x-y)",
        "12": "b(u_1x-u_2y)(x-y)",
        "111": "(x-bu_1y)(x-bu_2y)",
    },
}

# constant for the hook (3,1,1)
HOOK_311_CONSTANT = "((1-q)(1-q^2))^2(1-q^5)"
