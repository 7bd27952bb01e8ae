"""Writes data/sporadic_maximals.txt from ATLAS structure names.

Each maximal subgroup is given by its ATLAS name and its order as a product of
prime powers and simple-group orders; the script checks that every order divides
the group order before writing.
"""
import math
import sys
from fractions import Fraction


def lin(n, q):
    return q ** (n * (n - 1) // 2) * math.prod(q ** i - 1 for i in range(2, n + 1))


def psl(n, q):
    return lin(n, q) // math.gcd(n, q - 1)


def psu(n, q):
    o = q ** (n * (n - 1) // 2) * math.prod(q ** i - (-1) ** i for i in range(2, n + 1))
    return o // math.gcd(n, q + 1)


def psp(m, q):
    return q ** (m * m) * math.prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // math.gcd(2, q - 1)


def omega_odd(m, q):
    return psp(m, q)


def omega_plus(m, q):
    o = q ** (m * (m - 1)) * (q ** m - 1) * math.prod(q ** (2 * i) - 1 for i in range(1, m))
    return o // math.gcd(4, q ** m - 1)


def omega_minus(m, q):
    o = q ** (m * (m - 1)) * (q ** m + 1) * math.prod(q ** (2 * i) - 1 for i in range(1, m))
    return o // math.gcd(4, q ** m + 1)


def g2(q):
    return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)


def f4(q):
    return q ** 24 * (q ** 12 - 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 2 - 1)


def e6_twisted(q):
    o = q ** 36 * (q ** 12 - 1) * (q ** 9 + 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 5 + 1) * (q ** 2 - 1)
    return o // math.gcd(3, q + 1)


def d4_triality(q):
    return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)


def suzuki(q):
    return q ** 2 * (q ** 2 + 1) * (q - 1)


def alt(n):
    return math.factorial(n) // 2


def sym(n):
    return math.factorial(n)


tits = 2 ** 11 * 3 ** 3 * 5 ** 2 * 13  # 2F4(2)'

G = {
    "M11": 7920,
    "M12": 95040,
    "M22": 443520,
    "M23": 10200960,
    "M24": 244823040,
    "J1": 175560,
    "J2": 604800,
    "J3": 50232960,
    "J4": 2 ** 21 * 3 ** 3 * 5 * 7 * 11 ** 3 * 23 * 29 * 31 * 37 * 43,
    "HS": 44352000,
    "McL": 898128000,
    "He": 4030387200,
    "Ru": 145926144000,
    "Suz": 448345497600,
    "ON": 460815505920,
    "Co3": 495766656000,
    "Co2": 42305421312000,
    "Co1": 4157776806543360000,
    "Fi22": 64561751654400,
    "Fi23": 4089470473293004800,
    "Fi24'": 1255205709190661721292800,
    "HN": 273030912000000,
    "Ly": 51765179004000000,
    "Th": 90745943887872000,
    "B": 4154781481226426191177580544000000,
    "M": 808017424794512875886459904961710757005754368000000000,
}

L2 = lambda q: psl(2, q)  # noqa: E731
U3 = lambda q: psu(3, q)  # noqa: E731
U4_2, U4_3, U5_2, U6_2 = psu(4, 2), psu(4, 3), psu(5, 2), psu(6, 2)
L3_2, L3_3, L3_4, L3_5, L3_7, L5_2 = psl(3, 2), psl(3, 3), psl(3, 4), psl(3, 5), psl(3, 7), psl(5, 2)
S4_4, S6_2, S8_2 = psp(2, 4), psp(3, 2), psp(4, 2)
O7_3 = omega_odd(3, 3)
O8p2, O8p3, O8m3 = omega_plus(4, 2), omega_plus(4, 3), omega_minus(4, 3)
O10p2, O10m2 = omega_plus(5, 2), omega_minus(5, 2)
G2_3, G2_4, G2_5 = g2(3), g2(4), g2(5)

MAXIMALS = {
    "M11": [
        ("M10", 720),
        ("L2(11)", L2(11)),
        ("M9:2", 9 * 8 * 2),
        ("S5", sym(5)),
        ("2S4", 48),
    ],
    "M22": [
        ("L3(4)", L3_4),
        ("2^4:A6", 16 * alt(6)),
        ("A7", alt(7)),
        ("A7", alt(7)),
        ("2^4:S5", 16 * sym(5)),
        ("2^3:L3(2)", 8 * L3_2),
        ("M10", 720),
        ("L2(11)", L2(11)),
    ],
    "M23": [
        ("M22", G["M22"]),
        ("L3(4):2", L3_4 * 2),
        ("2^4:A7", 16 * alt(7)),
        ("A8", alt(8)),
        ("M11", G["M11"]),
        ("2^4:(3xA5):2", 16 * 3 * 60 * 2),
        ("23:11", 253),
    ],
    "J1": [
        ("L2(11)", L2(11)),
        ("2^3:7:3", 168),
        ("2xA5", 120),
        ("19:6", 114),
        ("11:10", 110),
        ("D6xD10", 60),
        ("7:6", 42),
    ],
    "J2": [
        ("U3(3)", U3(3)),
        ("3.A6.2", 3 * alt(6) * 2),
        ("2^1+4:A5", 32 * 60),
        ("2^2+4:(3xS3)", 64 * 18),
        ("A4xA5", 12 * 60),
        ("A5xD10", 60 * 10),
        ("L3(2):2", L3_2 * 2),
        ("5^2:D12", 25 * 12),
        ("A5", 60),
    ],
    "J3": [
        ("L2(16):2", L2(16) * 2),
        ("L2(19)", L2(19)),
        ("L2(19)", L2(19)),
        ("2^4:(3xA5)", 16 * 180),
        ("L2(17)", L2(17)),
        ("(3xA6):2", 3 * 360 * 2),
        ("3^2+1+2:8", 243 * 8),
        ("2^1+4:A5", 32 * 60),
        ("2^2+4:(3xS3)", 64 * 18),
    ],
    "J4": [
        ("2^11:M24", 2 ** 11 * G["M24"]),
        ("2^1+12.3M22:2", 2 ** 13 * 3 * G["M22"] * 2),
        ("2^10:L5(2)", 2 ** 10 * L5_2),
        ("2^3+12.(S5xL3(2))", 2 ** 15 * 120 * L3_2),
        ("U3(11):2", U3(11) * 2),
        ("M22:2", G["M22"] * 2),
        ("11^1+2:(5x2S4)", 11 ** 3 * 5 * 48),
        ("L2(32):5", L2(32) * 5),
        ("L2(23):2", L2(23) * 2),
        ("U3(3)", U3(3)),
        ("29:28", 29 * 28),
        ("43:14", 43 * 14),
        ("37:12", 37 * 12),
    ],
    "Co1": [
        ("Co2", G["Co2"]),
        ("3.Suz:2", 3 * G["Suz"] * 2),
        ("2^11:M24", 2 ** 11 * G["M24"]),
        ("Co3", G["Co3"]),
        ("2^1+8.O8+(2)", 2 ** 9 * O8p2),
        ("U6(2):S3", U6_2 * 6),
        ("(A4xG2(4)):2", 12 * G2_4 * 2),
        ("2^2+12:(A8xS3)", 2 ** 14 * alt(8) * 6),
        ("2^4+12.(S3x3S6)", 2 ** 16 * 6 * 3 * 720),
        ("3^2.U4(3).D8", 9 * U4_3 * 8),
        ("3^6:2M12", 3 ** 6 * 2 * G["M12"]),
        ("(A5xJ2):2", 60 * G["J2"] * 2),
        ("3^1+4.2U4(2).2", 3 ** 5 * 2 * U4_2 * 2),
        ("(A6xU3(3)):2", 360 * U3(3) * 2),
        ("3^3+4:2(S4xS4)", 3 ** 7 * 2 * 24 * 24),
        ("A9xS3", alt(9) * 6),
        ("(A7xL2(7)):2", alt(7) * L2(7) * 2),
        ("(D10x(A5xA5).2).2", 10 * 3600 * 2 * 2),
        ("5^1+2:GL2(5)", 125 * 480),
        ("5^3:(4xA5).2", 125 * 4 * 60 * 2),
        ("7^2:(3x2A4)", 49 * 3 * 24),
        ("5^2:2A5", 25 * 120),
    ],
    "Fi22": [
        ("2.U6(2)", 2 * U6_2),
        ("O7(3)", O7_3),
        ("O7(3)", O7_3),
        ("O8+(2):S3", O8p2 * 6),
        ("2^10:M22", 2 ** 10 * G["M22"]),
        ("2^6:S6(2)", 2 ** 6 * S6_2),
        ("(2x2^1+8):(U4(2):2)", 2 * 2 ** 9 * U4_2 * 2),
        ("U4(3):2", U4_3 * 2),
        ("2F4(2)'", tits),
        ("2^5+8:(S3xA6)", 2 ** 13 * 6 * 360),
        ("3^1+6:2^3+4:3^2:2", 3 ** 7 * 2 ** 7 * 9 * 2),
        ("S10", sym(10)),
        ("S10", sym(10)),
        ("M12", G["M12"]),
    ],
    "Fi23": [
        ("2.Fi22", 2 * G["Fi22"]),
        ("O8+(3):S3", O8p3 * 6),
        ("2^2.U6(2).2", 4 * U6_2 * 2),
        ("S8(2)", S8_2),
        ("O7(3)xS3", O7_3 * 6),
        ("2^11.M23", 2 ** 11 * G["M23"]),
        ("3^1+8.2^1+6.3^1+2.2S4", 3 ** 9 * 2 ** 7 * 3 ** 3 * 48),
        ("[3^10].(L3(3)x2)", 3 ** 10 * L3_3 * 2),
        ("S12", sym(12)),
        ("(2^2x2^1+8).(3xU4(2)).2", 4 * 2 ** 9 * 3 * U4_2 * 2),
        ("2^6+8:(A7xS3)", 2 ** 14 * alt(7) * 6),
        ("S6(2)xS4", S6_2 * 24),
        ("S4(4):4", S4_4 * 4),
        ("L2(23)", L2(23)),
    ],
    "Fi24'": [
        ("Fi23", G["Fi23"]),
        ("2.Fi22:2", 2 * G["Fi22"] * 2),
        ("(3xO8+(3):3):2", 3 * O8p3 * 3 * 2),
        ("O10-(2)", O10m2),
        ("3^7.O7(3)", 3 ** 7 * O7_3),
        ("3^1+10:U5(2):2", 3 ** 11 * U5_2 * 2),
        ("2^11.M24", 2 ** 11 * G["M24"]),
        ("2^2.U6(2):S3", 4 * U6_2 * 6),
        ("2^1+12.3U4(3).2", 2 ** 13 * 3 * U4_3 * 2),
        ("2^3+12.(L3(2)xA6)", 2 ** 15 * L3_2 * 360),
        ("3^2.3^4.3^8.(A5x2A4).2", 3 ** 14 * 60 * 24 * 2),
        ("(A4xO8+(2):3):2", 12 * O8p2 * 3 * 2),
        ("He:2", G["He"] * 2),
        ("He:2", G["He"] * 2),
        ("2^6+8.(S3xA8)", 2 ** 14 * 6 * alt(8)),
        ("(3^2:2xG2(3)).2", 18 * G2_3 * 2),
        ("(A5xA9):2", 60 * alt(9) * 2),
        ("A6xL2(8):3", 360 * L2(8) * 3),
        ("7:6xA7", 42 * alt(7)),
        ("U3(3):2", U3(3) * 2),
        ("U3(3):2", U3(3) * 2),
        ("L2(13):2", L2(13) * 2),
        ("L2(13):2", L2(13) * 2),
        ("29:14", 29 * 14),
    ],
    "He": [
        ("S4(4):2", S4_4 * 2),
        ("S4(4):2", S4_4 * 2),
        ("2^2.L3(4).S3", 4 * L3_4 * 6),
        ("2^6:3.S6", 64 * 3 * 720),
        ("2^6:3.S6", 64 * 3 * 720),
        ("2^1+6.L3(2)", 2 ** 7 * L3_2),
        ("7^2:2L2(7)", 49 * 2 * L2(7)),
        ("3.S7", 3 * sym(7)),
        ("7^1+2:(S3x3)", 7 ** 3 * 18),
        ("S4xL3(2)", 24 * L3_2),
        ("7:3xL3(2)", 21 * L3_2),
        ("5^2:4A4", 25 * 4 * 12),
    ],
    "Ru": [
        ("2F4(2)", tits * 2),
        ("2^6.U3(3).2", 64 * U3(3) * 2),
        ("(2^2xSz(8)):3", 4 * suzuki(8) * 3),
        ("2^3+8:L3(2)", 2 ** 11 * L3_2),
        ("U3(5):2", U3(5) * 2),
        ("2^1+4+6.S5", 2 ** 11 * 120),
        ("L2(25).2^2", L2(25) * 4),
        ("A8", alt(8)),
        ("L2(29)", L2(29)),
        ("5^2:4S5", 25 * 4 * 120),
        ("3.A6.2^2", 3 * 360 * 4),
        ("5^1+2:[2^5]", 125 * 32),
        ("L2(13):2", L2(13) * 2),
        ("A6.2^2", 360 * 4),
        ("5:4xA5", 20 * 60),
    ],
    "Suz": [
        ("G2(4)", G2_4),
        ("3.U4(3):2", 3 * U4_3 * 2),
        ("U5(2)", U5_2),
        ("2^1+6.U4(2)", 2 ** 7 * U4_2),
        ("3^5:M11", 3 ** 5 * G["M11"]),
        ("J2:2", G["J2"] * 2),
        ("2^4+6:3A6", 2 ** 10 * 3 * 360),
        ("(A4xL3(4)):2", 12 * L3_4 * 2),
        ("2^2+8:(A5xS3)", 2 ** 10 * 60 * 6),
        ("M12:2", G["M12"] * 2),
        ("3^2+4:2(A4x2^2).2", 3 ** 6 * 2 * 48 * 2),
        ("(A6xA5).2", 360 * 60 * 2),
        ("(3^2:4xA6).2", 36 * 360 * 2),
        ("L3(3):2", L3_3 * 2),
        ("L3(3):2", L3_3 * 2),
        ("L2(25)", L2(25)),
        ("A7", alt(7)),
    ],
    "ON": [
        ("L3(7):2", L3_7 * 2),
        ("L3(7):2", L3_7 * 2),
        ("J1", G["J1"]),
        ("4.L3(4):2", 4 * L3_4 * 2),
        ("(3^2:4xA6).2", 36 * 360 * 2),
        ("3^4:2^1+4D10", 81 * 32 * 10),
        ("L2(31)", L2(31)),
        ("L2(31)", L2(31)),
        ("4^3.L3(2)", 64 * L3_2),
        ("M11", G["M11"]),
        ("M11", G["M11"]),
        ("A7", alt(7)),
        ("A7", alt(7)),
    ],
    "HN": [
        ("A12", alt(12)),
        ("2.HS.2", 2 * G["HS"] * 2),
        ("U3(8):3", U3(8) * 3),
        ("2^1+8.(A5xA5).2", 2 ** 9 * 3600 * 2),
        ("(D10xU3(5)).2", 10 * U3(5) * 2),
        ("5^1+4.2^1+4.5.4", 5 ** 5 * 2 ** 5 * 5 * 4),
        ("2^6.U4(2)", 64 * U4_2),
        ("(A6xA6).D8", 360 * 360 * 8),
        ("2^3+2+6.(3xL3(2))", 2 ** 11 * 3 * L3_2),
        ("5^2+1+2.4A5", 5 ** 5 * 4 * 60),
        ("M12:2", G["M12"] * 2),
        ("M12:2", G["M12"] * 2),
        ("3^4:2(A4xA4).4", 81 * 2 * 144 * 4),
        ("3^1+4:4A5", 3 ** 5 * 4 * 60),
    ],
    "Ly": [
        ("G2(5)", G2_5),
        ("3.McL:2", 3 * G["McL"] * 2),
        ("5^3.L3(5)", 125 * L3_5),
        ("2.A11", 2 * alt(11)),
        ("5^1+4:4S6", 5 ** 5 * 4 * 720),
        ("3^5:(2xM11)", 3 ** 5 * 2 * G["M11"]),
        ("3^2+4:2A5.D8", 3 ** 6 * 120 * 8),
        ("67:22", 67 * 22),
        ("37:18", 37 * 18),
    ],
    "Th": [
        ("3D4(2):3", d4_triality(2) * 3),
        ("2^5.L5(2)", 32 * L5_2),
        ("2^1+8.A9", 2 ** 9 * alt(9)),
        ("U3(8):6", U3(8) * 6),
        ("(3xG2(3)):2", 3 * G2_3 * 2),
        ("3.[3^8].2S4", 3 ** 9 * 48),
        ("3^2.[3^7].2S4", 3 ** 9 * 48),
        ("3^5:2S6", 3 ** 5 * 1440),
        ("5^1+2:4S4", 125 * 96),
        ("5^2:GL2(5)", 25 * 480),
        ("7^2:(3x2S4)", 49 * 144),
        ("L2(19):2", L2(19) * 2),
        ("L3(3)", L3_3),
        ("M10", 720),
        ("31:15", 465),
        ("S5", 120),
    ],
    "B": [
        ("2.2E6(2):2", 2 * e6_twisted(2) * 2),
        ("2^1+22.Co2", 2 ** 23 * G["Co2"]),
        ("Fi23", G["Fi23"]),
        ("2^9+16.S8(2)", 2 ** 25 * S8_2),
        ("Th", G["Th"]),
        ("(2^2xF4(2)):2", 4 * f4(2) * 2),
        ("2^2+10+20.(M22:2xS3)", 2 ** 32 * G["M22"] * 2 * 6),
        ("[2^30].L5(2)", 2 ** 30 * L5_2),
        ("S3xFi22:2", 6 * G["Fi22"] * 2),
        ("[2^35].(S5xL3(2))", 2 ** 35 * 120 * L3_2),
        ("HN:2", G["HN"] * 2),
        ("O8+(3):S4", O8p3 * 24),
        ("3^1+8.2^1+6.U4(2).2", 3 ** 9 * 2 ** 7 * U4_2 * 2),
        ("(3^2:D8xU4(3).2.2).2", 72 * U4_3 * 4 * 2),
        ("5:4xHS:2", 20 * G["HS"] * 2),
        ("S4x2F4(2)", 24 * tits * 2),
        ("[3^11].(S4x2S4)", 3 ** 11 * 24 * 48),
        ("S5xM22:2", 120 * G["M22"] * 2),
        ("(S6xL3(4):2):2", 720 * L3_4 * 2 * 2),
        ("5^3.L3(5)", 125 * L3_5),
        ("5^1+4.2^1+4.A5.4", 5 ** 5 * 2 ** 5 * 60 * 4),
        ("(S6xS6).4", 720 * 720 * 4),
        ("5^2:4S4xS5", 25 * 96 * 120),
        ("L2(49).2", L2(49) * 2),
        ("L2(31)", L2(31)),
        ("M11", G["M11"]),
        ("L3(3)", L3_3),
        ("L2(17):2", L2(17) * 2),
        ("L2(11):2", L2(11) * 2),
        ("47:23", 47 * 23),
    ],
    "M": [
        ("2.B", 2 * G["B"]),
        ("2^1+24.Co1", 2 ** 25 * G["Co1"]),
        ("3.Fi24", 3 * G["Fi24'"] * 2),
        ("2^2.2E6(2):S3", 4 * e6_twisted(2) * 6),
        ("2^10+16.O10+(2)", 2 ** 26 * O10p2),
        ("2^2+11+22.(M24xS3)", 2 ** 35 * G["M24"] * 6),
        ("3^1+12.2Suz.2", 3 ** 13 * 2 * G["Suz"] * 2),
        ("2^5+10+20.(S3xL5(2))", 2 ** 35 * 6 * L5_2),
        ("S3xTh", 6 * G["Th"]),
        ("2^3+6+12+18.(L3(2)x3S6)", 2 ** 39 * L3_2 * 3 * 720),
        ("3^8.O8-(3).2", 3 ** 8 * O8m3 * 2),
        ("(D10xHN).2", 10 * G["HN"] * 2),
        ("(3^2:2xO8+(3)).S4", 18 * O8p3 * 24),
        ("3^2+5+10.(M11x2S4)", 3 ** 17 * G["M11"] * 48),
        ("3^3+2+6+6:(L3(3)xSD16)", 3 ** 17 * L3_3 * 16),
        ("5^1+6:2J2:4", 5 ** 7 * 2 * G["J2"] * 4),
        ("(7:3xHe):2", 21 * G["He"] * 2),
        ("(A5xA12):2", 60 * alt(12) * 2),
        ("5^3+3.(2xL3(5))", 5 ** 6 * 2 * L3_5),
        ("(A6xA6xA6).(2xS4)", 360 ** 3 * 48),
        ("(A5xU3(8):3):2", 60 * U3(8) * 3 * 2),
        ("5^2+2+4:(S3xGL2(5))", 5 ** 8 * 6 * 480),
        ("(L3(2)xS4(4):2).2", L3_2 * S4_4 * 2 * 2),
        ("7^1+4:(3x2S7)", 7 ** 5 * 3 * 2 * sym(7)),
        ("(5^2:[2^4]xU3(5)).S3", 25 * 16 * U3(5) * 6),
        ("(L2(11)xM12):2", L2(11) * G["M12"] * 2),
        ("(A7x(A5xA5):2^2):2", alt(7) * 3600 * 4 * 2),
        ("5^4:(3x2L2(25)):2", 5 ** 4 * 3 * 2 * L2(25) * 2),
        ("7^2+1+2:GL2(7)", 7 ** 5 * 2016),
        ("M11xA6.2^2", G["M11"] * 360 * 4),
        ("(S5xS5xS5):S3", 120 ** 3 * 6),
        ("(L2(11)xL2(11)):4", L2(11) ** 2 * 4),
        ("13^2:2L2(13).4", 169 * 2 * L2(13) * 4),
        ("(7^2:(3x2A4)xL2(7)).2", 49 * 72 * L2(7) * 2),
        ("(13:6xL3(3)).2", 78 * L3_3 * 2),
        ("13^1+2:(3x4S4)", 13 ** 3 * 3 * 96),
        ("U3(4):4", U3(4) * 4),
        ("L2(71)", L2(71)),
        ("L2(59)", L2(59)),
        ("11^2:(5x2A5)", 121 * 5 * 120),
        ("L2(41)", L2(41)),
        ("L2(29):2", L2(29) * 2),
        ("7^2:SL2(7)", 49 * 336),
        ("L2(19):2", L2(19) * 2),
        ("L2(13):2", L2(13) * 2),
        ("41:40", 41 * 40),
    ],
}

SOURCES = {
    "M": "ATLAS of Finite Groups (1985); complete list of Dietrich, Lee and Popiel (2023)",
    "B": "ATLAS of Finite Groups (1985); Wilson, ATLAS v3 (2017)",
    "Fi24'": "ATLAS of Finite Groups (1985); Linton and Wilson (1991)",
}
DEFAULT_SOURCE = "ATLAS of Finite Groups (1985); Wilson, ATLAS v3 (2017)"


def main(out_path):
    lines = [
        "# Sporadic simple groups with the orders of their maximal subgroups (one entry per conjugacy class).",
        "# Generated by data/scripts/make_sporadic_maximals.py; structure names are listed there.",
        "# name | order | m1,m2,... | source",
    ]
    for name, maxes in MAXIMALS.items():
        order = G[name]
        for label, m in maxes:
            if Fraction(order, m).denominator != 1:
                sys.exit(f"{name}: {label} of order {m} does not divide {order}")
            if m == order:
                sys.exit(f"{name}: {label} is not proper")
        orders = ",".join(str(m) for _, m in maxes)
        lines.append(f"{name} | {order} | {orders} | {SOURCES.get(name, DEFAULT_SOURCE)}")
    with open(out_path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/sporadic_maximals.txt")
