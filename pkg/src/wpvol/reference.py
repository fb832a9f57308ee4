"""
Published Weil-Petersson volume table, used as ground truth.

Each row maps (g, n) to ``(partition, coefficient, p_exp)`` triples in the
monomial symmetric basis m_(partition); the term is coefficient * pi^(2 p_exp)
* m_(partition).  For n = 0 the single entry is the closed volume.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

__all__ = ["VOLUME_TABLE", "CLOSED_VOLUMES", "KERNEL_TABLE", "WORKED_RHS_1_2", "table_entry"]

_ROWS = {
    (0, 3): [
        ((), "1", 0),
    ],
    (0, 4): [
        ((1,), "1/2", 0),
        ((), "2", 1),
    ],
    (0, 5): [
        ((2,), "1/8", 0),
        ((1, 1), "1/2", 0),
        ((1,), "3", 1),
        ((), "10", 2),
    ],
    (0, 6): [
        ((3,), "1/48", 0),
        ((2, 1), "3/16", 0),
        ((1, 1, 1), "3/4", 0),
        ((2,), "3/2", 1),
        ((1, 1), "6", 1),
        ((1,), "26", 2),
        ((), "244/3", 3),
    ],
    (0, 7): [
        ((4,), "1/384", 0),
        ((3, 1), "1/24", 0),
        ((2, 2), "3/32", 0),
        ((2, 1, 1), "3/8", 0),
        ((1, 1, 1, 1), "3/2", 0),
        ((3,), "5/12", 1),
        ((2, 1), "15/4", 1),
        ((1, 1, 1), "15", 1),
        ((2,), "20", 2),
        ((1, 1), "80", 2),
        ((1,), "910/3", 3),
        ((), "2758/3", 4),
    ],
    (1, 1): [
        ((1,), "1/48", 0),
        ((), "1/12", 1),
    ],
    (1, 2): [
        ((2,), "1/192", 0),
        ((1, 1), "1/96", 0),
        ((1,), "1/12", 1),
        ((), "1/4", 2),
    ],
    (1, 3): [
        ((3,), "1/1152", 0),
        ((2, 1), "1/192", 0),
        ((1, 1, 1), "1/96", 0),
        ((2,), "1/24", 1),
        ((1, 1), "1/8", 1),
        ((1,), "13/24", 2),
        ((), "14/9", 3),
    ],
    (1, 4): [
        ((4,), "1/9216", 0),
        ((3, 1), "1/768", 0),
        ((2, 2), "1/384", 0),
        ((2, 1, 1), "1/128", 0),
        ((1, 1, 1, 1), "1/64", 0),
        ((3,), "7/576", 1),
        ((2, 1), "1/12", 1),
        ((1, 1, 1), "1/4", 1),
        ((2,), "41/96", 2),
        ((1, 1), "17/12", 2),
        ((1,), "187/36", 3),
        ((), "529/36", 4),
    ],
    (1, 5): [
        ((5,), "1/92160", 0),
        ((4, 1), "1/4608", 0),
        ((3, 2), "7/9216", 0),
        ((3, 1, 1), "1/384", 0),
        ((2, 2, 1), "1/192", 0),
        ((2, 1, 1, 1), "1/64", 0),
        ((1, 1, 1, 1, 1), "1/32", 0),
        ((4,), "11/4608", 1),
        ((3, 1), "35/1152", 1),
        ((2, 2), "1/16", 1),
        ((2, 1, 1), "5/24", 1),
        ((1, 1, 1, 1), "5/8", 1),
        ((3,), "13/72", 2),
        ((2, 1), "253/192", 2),
        ((1, 1, 1), "35/8", 2),
        ((2,), "809/144", 3),
        ((1, 1), "703/36", 3),
        ((1,), "4771/72", 4),
        ((), "16751/90", 5),
    ],
    (2, 1): [
        ((4,), "1/442368", 0),
        ((3,), "29/138240", 1),
        ((2,), "139/23040", 2),
        ((1,), "169/2880", 3),
        ((), "29/192", 4),
    ],
    (2, 2): [
        ((5,), "1/4423680", 0),
        ((4, 1), "1/294912", 0),
        ((3, 2), "29/2211840", 0),
        ((4,), "11/276480", 1),
        ((3, 1), "29/69120", 1),
        ((2, 2), "7/7680", 1),
        ((3,), "19/7680", 2),
        ((2, 1), "181/11520", 2),
        ((2,), "551/8640", 3),
        ((1, 1), "7/36", 3),
        ((1,), "1085/1728", 4),
        ((), "787/480", 5),
    ],
    (2, 3): [
        ((6,), "1/53084160", 0),
        ((5, 1), "1/2211840", 0),
        ((4, 2), "11/4423680", 0),
        ((4, 1, 1), "1/147456", 0),
        ((3, 3), "29/6635520", 0),
        ((3, 2, 1), "29/1105920", 0),
        ((2, 2, 2), "7/122880", 0),
        ((5,), "1/172800", 1),
        ((4, 1), "11/110592", 1),
        ((3, 2), "5/13824", 1),
        ((3, 1, 1), "29/27648", 1),
        ((2, 2, 1), "7/3072", 1),
        ((4,), "41/61440", 2),
        ((3, 1), "211/27648", 2),
        ((2, 2), "37/2304", 2),
        ((2, 1, 1), "223/4608", 2),
        ((3,), "77/2160", 3),
        ((2, 1), "827/3456", 3),
        ((1, 1, 1), "419/576", 3),
        ((2,), "30403/34560", 4),
        ((1, 1), "611/216", 4),
        ((1,), "75767/8640", 5),
        ((), "1498069/64800", 6),
    ],
    (3, 1): [
        ((7,), "1/53508833280", 0),
        ((6,), "77/9555148800", 1),
        ((5,), "3781/2786918400", 2),
        ((4,), "47209/418037760", 3),
        ((3,), "127189/26127360", 4),
        ((2,), "8983379/87091200", 5),
        ((1,), "8497697/9331200", 6),
        ((), "9292841/4082400", 7),
    ],
    (3, 2): [
        ((8,), "1/856141332480", 0),
        ((7, 1), "1/21403533312", 0),
        ((6, 2), "77/152882380800", 0),
        ((5, 3), "503/267544166400", 0),
        ((4, 4), "607/214035333120", 0),
        ((7,), "17/22295347200", 1),
        ((6, 1), "77/3185049600", 1),
        ((5, 2), "17/88473600", 1),
        ((4, 3), "1121/2229534720", 1),
        ((6,), "1499/7431782400", 2),
        ((5, 1), "899/185794560", 2),
        ((4, 2), "10009/371589120", 2),
        ((3, 3), "191/4128768", 2),
        ((5,), "3859/139345920", 3),
        ((4, 1), "33053/69672960", 3),
        ((3, 2), "120191/69672960", 3),
        ((4,), "195697/92897280", 4),
        ((3, 1), "110903/4644864", 4),
        ((2, 2), "6977/138240", 4),
        ((3,), "37817/430080", 5),
        ((2, 1), "2428117/4147200", 5),
        ((2,), "5803333/3110400", 6),
        ((1, 1), "18444319/3110400", 6),
        ((1,), "20444023/1209600", 7),
        ((), "2800144027/65318400", 8),
    ],
    (4, 1): [
        ((10,), "1/29588244450508800", 0),
        ((9,), "149/3698530556313600", 1),
        ((8,), "48689/2397195730944000", 2),
        ((7,), "50713/8989483991040", 3),
        ((6,), "30279589/32105299968000", 4),
        ((5,), "43440449/445906944000", 5),
        ((4,), "274101371/44590694400", 6),
        ((3,), "66210015481/292626432000", 7),
        ((2,), "221508280867/50164531200", 8),
        ((1,), "74706907467169/1975228416000", 9),
        ((), "92480712720869/987614208000", 10),
    ],
    (5, 1): [
        ((13,), "1/48742490377990176768000", 0),
        ((12,), "7/133907940598874112000", 1),
        ((11,), "1823/31067656673034240000", 2),
        ((10,), "296531/7766914168258560000", 3),
        ((9,), "68114707/4271802792542208000", 4),
        ((8,), "2123300941/474644754726912000", 5),
        ((7,), "42408901133/49442161950720000", 6),
        ((6,), "19817320001/176579149824000", 7),
        ((5,), "11171220559409/1135151677440000", 8),
        ((4,), "62028372646367/111244864389120", 9),
        ((3,), "202087901261599/10534551552000", 10),
        ((2,), "626693680890100121/1738201006080000", 11),
        ((1,), "881728936440038779/289700167680000", 12),
        ((), "21185241498983729441/2824576634880000", 13),
    ],
}

_CLOSED = {
    2: ("43/2160", 3),
    3: ("176557/1209600", 6),
    4: ("1959225867017/493807104000", 9),
    5: ("84374265930915479/355541114880000", 12),
}

VOLUME_TABLE: Dict[Tuple[int, int], List[Tuple[Tuple[int, ...], Fraction, int]]] = {
    key: [(part, Fraction(c), d) for part, c, d in terms] for key, terms in _ROWS.items()
}

# g -> (coefficient, p_exp): V_{g,0} = coefficient * pi^(2 p_exp)
CLOSED_VOLUMES: Dict[int, Tuple[Fraction, int]] = {g: (Fraction(c), d) for g, (c, d) in _CLOSED.items()}

# k -> [(t_exp, p_exp, coefficient)] for the published F_{2k-1}(t)
KERNEL_TABLE: Dict[int, List[Tuple[int, int, Fraction]]] = {
    1: [(2, 0, Fraction(1, 2)), (0, 1, Fraction(2, 3))],
    2: [(4, 0, Fraction(1, 4)), (2, 1, Fraction(2)), (0, 2, Fraction(28, 15))],
    3: [(6, 0, Fraction(1, 6)), (4, 1, Fraction(10, 3)), (2, 2, Fraction(56, 3)), (0, 3, Fraction(992, 63))],
    4: [(8, 0, Fraction(1, 8)), (6, 1, Fraction(14, 3)), (4, 2, Fraction(196, 3)),
        (2, 3, Fraction(992, 3)), (0, 4, Fraction(4064, 15))],
}

# assembled right-hand side of the recursion for (1, 2), keyed by (p, x1, x2)
WORKED_RHS_1_2: Dict[Tuple[int, int, int], Fraction] = {
    (0, 2, 0): Fraction(5, 96),
    (0, 1, 1): Fraction(1, 16),
    (0, 0, 2): Fraction(1, 96),
    (1, 1, 0): Fraction(1, 2),
    (1, 0, 1): Fraction(1, 6),
    (2, 0, 0): Fraction(1, 2),
}


def table_entry(g: int, n: int):
    """Expected value for (g, n): a VolumePolynomial for n >= 1, ``(coeff, p_exp)`` for n = 0."""
    if n == 0:
        return CLOSED_VOLUMES[g]
    from .polyring import from_monomial_symmetric
    return from_monomial_symmetric(VOLUME_TABLE[(g, n)], n, g)
