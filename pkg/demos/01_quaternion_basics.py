"""Quaternion arithmetic walkthrough.

The amplitude field everything else uses: Hamilton products, conjugation,
norms, rotations on an imaginary axis, and the text format the CLI speaks.
"""

import math

from hqec import (
    I_AXIS,
    J_AXIS,
    K_AXIS,
    ImaginaryAxis,
    Quaternion,
    exp_axis,
    format_quaternion,
    parse_quaternion,
)
from hqec import quaternion as quat

print("== unit relations ==")
print("i*j =", quat.I * quat.J, "   j*i =", quat.J * quat.I)
print("i*j*k =", quat.I * quat.J * quat.K)
print("non-commutativity is the whole point: i*j == -(j*i)")

print()
print("== products and norms ==")
a = Quaternion(1, 1, 0, 0)
b = Quaternion(1, 0, 1, 0)
print("(1+i)(1+j) =", a * b)
print("norm_sq multiplies:", (a * b).norm_sq(), "=", a.norm_sq(), "*", b.norm_sq())

q = Quaternion(2, 3, -1, 0.5)
print("q =", q)
print("conj(q) =", q.conj())
print("q * q^-1 =", q * q.inverse())

print()
print("== axis rotations ==")
for axis, name in ((I_AXIS, "i"), (J_AXIS, "j"), (K_AXIS, "k")):
    r = exp_axis(axis, math.pi / 6)
    print(f"exp_axis({name}, pi/6) = {r}   norm_sq = {r.norm_sq():.15f}")

tilted = ImaginaryAxis.normalized(1, 1, 1)
r = exp_axis(tilted, 0.4)
print("tilted axis rotation:", r, " inverse check:", r * exp_axis(tilted, -0.4))

print()
print("== text format ==")
text = format_quaternion(Quaternion(1, -2, 0, 3))
print("rendered:", text)
print("parsed back:", parse_quaternion(text))
