# Computational services: root data, Weyl groups, semistability, feasibility, rendering
