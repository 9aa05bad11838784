"""Numerical toolkit for sums of generalized Dirichlet L-functions.

Library layout follows the subsystems: `arith` (exact integer sums),
`specfun` (special functions), `glfunc` (the L-functions themselves),
`transforms` (window weight transforms), `identities` (summation identities
and moment asymptotics), `geodesics` (prime geodesic census), `cli`.
"""

__version__ = "0.1.0"
