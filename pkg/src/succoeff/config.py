"""Central numeric defaults and tolerances.

Every tolerance used by the library lives here so that the accuracy
contract of the package can be audited (and tightened) in one place.
"""

# Truncation order used when callers do not ask for a specific jet length.
# a2/a3 only need order >= 4; larger orders support round-trip identities.
DEFAULT_ORDER = 12

# Series-level identities (ring axioms, termwise comparisons).
SERIES_ATOL = 1e-12

# exp/log and complex-power round trips accumulate a little more noise.
ROUNDTRIP_ATOL = 1e-11

# Structural invariants of atomic Herglotz representations.
REP_ATOL = 1e-12

# Accepted residual for the boundary two-atom moment solve.
MOMENT_RESIDUAL_TOL = 1e-10

# c values within this distance of 2 are treated as the single-atom case.
DEGENERATE_C_TOL = 1e-12

# Margin below which a sampled membership functional counts as a violation.
MEMBERSHIP_TOL = -1e-9

# Default sampling grid for membership checks.  Truncation error makes the
# check a necessary-style test near |z| -> 1; see families.membership_check.
MEMBERSHIP_RADII = (0.3, 0.6, 0.9)
MEMBERSHIP_ANGLES = 64

# Extremal attainment agreement between series construction and bound value.
ATTAINMENT_ATOL = 1e-9

# Grid optimizer defaults: exhaustive scan sizes, endpoint tolerance, and
# the number of step-halving refinement sweeps.
DEFAULT_GRID = (201, 101, 256)
GRID_TOL = 1e-3
REFINE_ITERS = 40

# Slack allowed when random class members are tested against a BoundInterval.
SAMPLE_SLACK = 1e-9
