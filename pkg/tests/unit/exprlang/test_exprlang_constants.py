"""Constants for expression and metric tests."""

SPHERE_FACTOR = "1/(1 + (x1^2+x2^2)/4)^2"

EXAMPLE_POINT = (0.3, 0.4)
FUNK_POINTS = (
    ((0.1, 0.2), (1.0, -0.5)),
    ((-0.4, 0.3), (0.2, 0.7)),
    ((0.5, -0.5), (-1.0, 0.1)),
)

SPHERE_FILE = """\
dim = 2
[alpha]
a11 = "1/(1 + (x1^2 + x2^2)/4)^2"
a22 = "1/(1 + (x1^2 + x2^2)/4)^2"
[beta]
b1 = "0"
"""

PARAM_FILE = """\
dim = 2
note = "constant one-form"
[params]
k = 0.25
[alpha]
a11 = "1"
a12 = "0"
a22 = "1"
[beta]
b1 = "k"
b2 = "-k*x1"
"""

EXACT = 1e-14
