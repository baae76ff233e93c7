"""Constants for alpha-geometry tests."""

SPHERE_POINT_2D = (0.1, -0.2)
SPHERE_POINT_3D = (0.23, -0.11, 0.31)
RANDOM_POINT_2D = (0.12, -0.08)
RANDOM_POINT_3D = (0.05, 0.17, -0.21)
FUNK_POINT = (0.2, -0.35)

DIRECTION_2D = (0.6, -1.1)
DIRECTION_3D = (0.4, 1.0, -0.7)

CURVATURE_TOLERANCE = 1e-8
IDENTITY_TOLERANCE = 1e-10
