"""Constants for classification tests."""

EXAMPLE_POINT = (0.3, 0.4)
SECOND_POINT = (0.1, -0.2)
GRID = ((0.1, 0.2), (-0.2, 0.1))

# c = <a, x> with a = (1, 0); mu = 3<a,x>^2 - 2|a|^2|x|^2
EXPECTED_C = 0.3
EXPECTED_C_PRIME = 0.9
EXPECTED_MU = 3 * 0.3**2 - 2 * 0.25
# theta = 3(n + 1)/(2n) xi in the plane
LEMMA_FACTOR_2D = 9 / 4
LEMMA_FACTOR_3D = 2.0

FUNK_MU = -0.25
SINE_ONE_FORM = """\
dim = 2
note = "non-Killing one-form"
[alpha]
a11 = "1"
a22 = "1"
[beta]
b1 = "0.3*sin(x2)"
"""

SIGMA_SINE = "0.1*sin(x1)"
SIGMA_LINEAR = "0.2*x1"
SIGMA_CONSTANT = "0.5"

SMALL_SAMPLES = 12
FIT_TOLERANCE = 1e-5
