"""The reference numbering of the 60 six-weight classes written in S(...) form,
used to pin the package's numbering table independently."""

import re

TEXT = """
S(21)=S(a4,a2,a1,a3,a5,a6) S(28)=S(a1,a3,a5,a2,a4,a6) S(2)=S(a1,a2,a4,a3,a5,a6)
S(4)=S(a1,a3,a4,a2,a5,a6) S(23)=S(a4,a3,a1,a2,a5,a6) S(26)=S(a1,a2,a5,a3,a4,a6)
S(45)=S(a2,a4,a1,a5,a3,a6) S(53)=S(a1,a5,a3,a4,a2,a6) S(47)=S(a2,a5,a1,a4,a3,a6)
S(51)=S(a1,a4,a3,a5,a2,a6) S(57)=S(a1,a4,a2,a5,a3,a6) S(59)=S(a1,a5,a2,a4,a3,a6)
S(15)=S(a3,a2,a1,a4,a5,a6) S(58)=S(a1,a4,a5,a2,a3,a6) S(1)=S(a1,a2,a3,a4,a5,a6)
S(6)=S(a1,a4,a3,a2,a5,a6) S(17)=S(a3,a4,a1,a2,a5,a6) S(56)=S(a1,a2,a5,a4,a3,a6)
S(9)=S(a2,a3,a1,a4,a5,a6) S(52)=S(a1,a4,a5,a3,a2,a6) S(3)=S(a1,a3,a2,a4,a5,a6)
S(5)=S(a1,a4,a2,a3,a5,a6) S(11)=S(a2,a4,a1,a3,a5,a6) S(50)=S(a1,a3,a5,a4,a2,a6)
S(13)=S(a3,a1,a2,a4,a5,a6) S(46)=S(a2,a4,a5,a1,a3,a6) S(7)=S(a2,a1,a3,a4,a5,a6)
S(12)=S(a2,a4,a3,a1,a5,a6) S(18)=S(a3,a4,a2,a1,a5,a6) S(44)=S(a2,a1,a5,a4,a3,a6)
S(19)=S(a4,a1,a2,a3,a5,a6) S(34)=S(a2,a3,a5,a1,a4,a6) S(8)=S(a2,a1,a4,a3,a5,a6)
S(10)=S(a2,a3,a4,a1,a5,a6) S(24)=S(a4,a3,a2,a1,a5,a6) S(32)=S(a2,a1,a5,a3,a4,a6)
S(20)=S(a4,a1,a3,a2,a5,a6) S(40)=S(a3,a2,a5,a1,a4,a6) S(14)=S(a3,a1,a4,a2,a5,a6)
S(16)=S(a3,a2,a4,a1,a5,a6) S(22)=S(a4,a2,a3,a1,a5,a6) S(38)=S(a3,a1,a5,a2,a4,a6)
S(39)=S(a3,a2,a1,a5,a4,a6) S(60)=S(a1,a5,a4,a2,a3,a6) S(25)=S(a1,a2,a3,a5,a4,a6)
S(30)=S(a1,a5,a3,a2,a4,a6) S(41)=S(a3,a5,a1,a2,a4,a6) S(55)=S(a1,a2,a4,a5,a3,a6)
S(33)=S(a2,a3,a1,a5,a4,a6) S(54)=S(a1,a5,a4,a3,a2,a6) S(27)=S(a1,a3,a2,a5,a4,a6)
S(29)=S(a1,a5,a2,a3,a4,a6) S(35)=S(a2,a5,a1,a3,a4,a6) S(49)=S(a1,a3,a4,a5,a2,a6)
S(37)=S(a3,a1,a2,a5,a4,a6) S(48)=S(a2,a5,a4,a1,a3,a6) S(31)=S(a2,a1,a3,a5,a4,a6)
S(36)=S(a2,a5,a3,a1,a4,a6) S(42)=S(a3,a5,a2,a1,a4,a6) S(43)=S(a3,a5,a4,a1,a2,a6)
"""

FAMILY_ORDER = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X")


def parse():
    """Returns (numbering, families): index -> arrangement, label -> indices."""
    entries = re.findall(r"S\((\d+)\)=S\(([a0-9,]+)\)", TEXT)
    numbering = {}
    order = []
    for idx, body in entries:
        numbering[int(idx)] = tuple(int(x[1:]) for x in body.split(","))
        order.append(int(idx))
    families = {lab: tuple(order[6 * k: 6 * k + 6]) for k, lab in enumerate(FAMILY_ORDER)}
    return numbering, families
