"""Tour of the odd-dimensional equivariant rings as a graph calculus.

Run with:  python3 demos/equivariant_graphs.py
"""

from equiconf import equiodd
from equiconf.charclasses import GroupSpec

# The torus-equivariant cohomology of Conf_l(R^(2n+1)) is spanned by simple
# graphs on l vertices with coefficients in Q[q_1..q_n]. An edge {i, j} is
# the degree-2n class y_ij; multiplication superposes graphs and reduces:
# a double edge contracts to p_n = (q_1...q_n)^2, and a repeated maximum
# rewrites through the deformed three-term relation.

y = lambda i, j: equiodd.generator(3, 1, i, j)

print("double edge:   y12 * y12 =", y(1, 2) * y(1, 2))
print("shared vertex: y13 * y23 =", y(1, 3) * y(2, 3))

print()
print("dimension bookkeeping (l = 3, n = 1, degrees 0..8):",
      [equiodd.torus_dimension(3, 1, d) for d in range(0, 9, 2)])
print("matches the closed series:",
      [equiodd.leray_hirsch_dimension(3, 1, d) for d in range(0, 9, 2)])

print()
print("forgetting the group action sends q to 0 and y_ij to 2 x_ij:")
print("  y12*y13 ->", equiodd.nonequivariant_restriction(y(1, 2) * y(1, 3)))

print()
so3 = GroupSpec("so_odd", 1)
o3 = GroupSpec("o_odd", 1)
print("SO(3)-fixed dims on two points (degrees 0..8):",
      [equiodd.fixed_point_dimension(so3, 2, d) for d in range(0, 9, 2)])
print("O(3)-fixed dims on two points  (degrees 0..8):",
      [equiodd.fixed_point_dimension(o3, 2, d) for d in range(0, 9, 2)])
print("degree-2 SO(3) fixed basis:",
      [str(e) for e in equiodd.fixed_point_basis(so3, 2, 2)])

print()
print("graphs render to DOT, one graph per monomial:")
print((y(1, 3) * y(2, 3)).to_dot())
