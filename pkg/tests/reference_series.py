"""Reference expansions per power of t, in the package polynomial text syntax.

S4 uses x1..x7 for the patterns of length two and three and x8..x21 for the
fourteen patterns of length four (y1..y14 in the library)."""

FH = {
    0: "1",
    1: "1",
    2: "x1 + x2",
    3: "x1^3 + x1^2*x2 + 2*x1*x2^2 + x2^3",
    4: "x1^6 + x1^5*x2 + 2*x1^4*x2^2 + 3*x1^3*x2^3 + 3*x1^2*x2^4 + 3*x1*x2^5 + x2^6",
    5: "x1^10 + x1^9*x2 + 2*x1^8*x2^2 + 3*x1^7*x2^3 + 5*x1^6*x2^4 + 5*x1^5*x2^5 + 7*x1^4*x2^6 + 7*x1^3*x2^7 + 6*x1^2*x2^8 + 4*x1*x2^9 + x2^10",
}

FH_X = {
    0: "1",
    1: "1",
    2: "1 + x",
    3: "1 + 2*x + x^2 + x^3",
    4: "1 + 3*x + 3*x^2 + 3*x^3 + 2*x^4 + x^5 + x^6",
    5: "1 + 4*x + 6*x^2 + 7*x^3 + 7*x^4 + 5*x^5 + 5*x^6 + 3*x^7 + 2*x^8 + x^9 + x^10",
}

S3 = {
    0: "1",
    1: "1",
    2: "x1 + x2",
    3: "x1^3*x3 + x1^2*x2*x4 + x1*x2^2*x5 + x1*x2^2*x6 + x2^3*x7",
    4: "x1^6*x3^4 + x1^5*x2*x3^2*x4^2 + x1^4*x2^2*x3*x4^2*x5 + x1^3*x2^3*x3*x5^3 + x1^4*x2^2*x3*x4^2*x6 + x1^2*x2^4*x5^2*x6^2 + x1^3*x2^3*x3*x6^3 + x1^3*x2^3*x4^3*x7 + x1^2*x2^4*x4*x5^2*x7 + x1^2*x2^4*x4*x6^2*x7 + x1*x2^5*x5^2*x7^2 + x1*x2^5*x5*x6*x7^2 + x1*x2^5*x6^2*x7^2 + x2^6*x7^4",
    5: "x1^10*x3^10 + x1^9*x2*x3^7*x4^3 + x1^8*x2^2*x3^5*x4^4*x5 + x1^7*x2^3*x3^4*x4^3*x5^3 + x1^6*x2^4*x3^4*x5^6 + x1^8*x2^2*x3^5*x4^4*x6 + x1^6*x2^4*x3^2*x4^4*x5^2*x6^2 + x1^7*x2^3*x3^4*x4^3*x6^3 + x1^4*x2^6*x3*x5^6*x6^3 + x1^6*x2^4*x3^4*x6^6 + x1^4*x2^6*x3*x5^3*x6^6 + x1^7*x2^3*x3^3*x4^6*x7 + x1^6*x2^4*x3^2*x4^5*x5^2*x7 + x1^5*x2^5*x3^2*x4^2*x5^5*x7 + x1^6*x2^4*x3^2*x4^5*x6^2*x7 + x1^5*x2^5*x3^2*x4^2*x6^5*x7 + x1^5*x2^5*x3*x4^5*x5^2*x7^2 + x1^4*x2^6*x3*x4^2*x5^5*x7^2 + x1^5*x2^5*x3*x4^5*x5*x6*x7^2 + x1^4*x2^6*x3*x4^2*x5^4*x6*x7^2 + x1^5*x2^5*x3*x4^5*x6^2*x7^2 + x1^3*x2^7*x4*x5^4*x6^3*x7^2 + x1^4*x2^6*x3*x4^2*x5*x6^4*x7^2 + x1^3*x2^7*x4*x5^3*x6^4*x7^2 + x1^4*x2^6*x3*x4^2*x6^5*x7^2 + x1^3*x2^7*x3*x5^6*x7^3 + x1^3*x2^7*x3*x5^3*x6^3*x7^3 + x1^3*x2^7*x3*x6^6*x7^3 + x1^4*x2^6*x4^6*x7^4 + x1^3*x2^7*x4^3*x5^3*x7^4 + x1^2*x2^8*x5^4*x6^2*x7^4 + x1^3*x2^7*x4^3*x6^3*x7^4 + x1^2*x2^8*x5^3*x6^3*x7^4 + x1^2*x2^8*x5^2*x6^4*x7^4 + x1^2*x2^8*x4*x5^4*x7^5 + x1^2*x2^8*x4*x5^2*x6^2*x7^5 + x1^2*x2^8*x4*x6^4*x7^5 + x1*x2^9*x5^3*x7^7 + x1*x2^9*x5^2*x6*x7^7 + x1*x2^9*x5*x6^2*x7^7 + x1*x2^9*x6^3*x7^7 + x2^10*x7^10",
}

P123 = {
    0: "1",
    1: "1",
    2: "2",
    3: "4 + x",
    4: "8 + 4*x + x^2 + x^4",
    5: "16 + 12*x + 5*x^2 + x^3 + 4*x^4 + 2*x^5 + x^7 + x^10",
    6: "32 + 32*x + 18*x^2 + 6*x^3 + 13*x^4 + 10*x^5 + 3*x^6 + 4*x^7 + 3*x^8 + 5*x^10 + 2*x^11 + 2*x^13 + x^16 + x^20",
}

P213 = {
    0: "1",
    1: "1",
    2: "2",
    3: "4 + x",
    4: "8 + 2*x + 3*x^2 + x^3",
    5: "16 + 5*x + 6*x^2 + 5*x^3 + 3*x^4 + 5*x^5 + 2*x^6",
    6: "32 + 12*x + 16*x^2 + 11*x^3 + 9*x^4 + 10*x^5 + 10*x^6 + 5*x^7 + 10*x^8 + 10*x^9 + 6*x^10 + x^12",
}

P231 = {
    0: "1",
    1: "1",
    2: "2",
    3: "4 + x",
    4: "8 + 2*x + 3*x^2 + x^3",
    5: "16 + 4*x + 6*x^2 + 7*x^3 + 4*x^4 + 2*x^5 + 3*x^6",
    6: "32 + 8*x + 12*x^2 + 14*x^3 + 17*x^4 + 7*x^5 + 17*x^6 + 5*x^7 + 5*x^8 + 8*x^9 + 5*x^10 + 2*x^12",
}

P321 = {
    0: "1",
    1: "1",
    2: "2",
    3: "4 + x",
    4: "7 + 3*x + 3*x^2 + x^4",
    5: "11 + 5*x + 9*x^2 + 3*x^3 + 6*x^4 + 3*x^5 + 4*x^7 + x^10",
    6: "16 + 7*x + 15*x^2 + 9*x^3 + 17*x^4 + 7*x^5 + 10*x^6 + 12*x^7 + 7*x^8 + 6*x^9 + 7*x^10 + 3*x^11 + 6*x^12 + 4*x^13 + 5*x^16 + x^20",
}

S4 = {
    0: "1",
    1: "1",
    2: "x1 + x2",
    3: "x1^3*x3 + x1^2*x2*x4 + x1*x2^2*x5 + x1*x2^2*x6 + x2^3*x7",
    4: "x1^4*x10*x2^2*x3*x4^2*x5 + x1^3*x11*x2^3*x3*x5^3 + x1^4*x12*x2^2*x3*x4^2*x6 + x1^2*x15*x2^4*x5^2*x6^2 + x1^3*x17*x2^3*x3*x6^3 + x1^3*x13*x2^3*x4^3*x7 + x1^2*x14*x2^4*x4*x5^2*x7 + x1^2*x18*x2^4*x4*x6^2*x7 + x1*x16*x2^5*x5^2*x7^2 + x1*x19*x2^5*x5*x6*x7^2 + x1*x2^5*x20*x6^2*x7^2 + x2^6*x21*x7^4 + x1^6*x3^4*x8 + x1^5*x2*x3^2*x4^2*x9",
}

TOWER123 = {
    0: "1",
    1: "1",
    2: "1 + q",
    3: "1 + 2*q + q^2 + q^2*x",
    4: "1 + 3*q + 3*q^2 + q^3 + 2*q^2*x + 2*q^3*x + q^4*x^2 + q^3*x^3",
    5: "1 + 4*q + 6*q^2 + 4*q^3 + q^4 + 3*q^2*x + 6*q^3*x + 3*q^4*x + 3*q^4*x^2 + 2*q^5*x^2 + 2*q^3*x^3 + 2*q^4*x^3 + q^6*x^3 + 2*q^5*x^4 + q^4*x^6 + q^6*x^6",
}

D = {
    0: "1",
    1: "1",
    2: "1 + q",
    3: "1 + q + 2*q^2 + q*x",
    4: "1 + q + 2*q^2 + 2*q^3 + q^4 + q*x + 2*q^3*x + q*x^2 + 3*q^2*x^2",
    5: "1 + q + 2*q^2 + 2*q^3 + 3*q^4 + 2*q^6 + q*x + 2*q^3*x + 2*q^5*x + q*x^2 + 3*q^2*x^2 + 5*q^4*x^2 + 2*q^5*x^2 + q*x^3 + q^2*x^3 + 4*q^3*x^3 + q^4*x^3 + 3*q^2*x^4 + 4*q^3*x^4 + q^4*x^4",
}
