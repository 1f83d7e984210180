"""Exact computation with universal Schubert polynomials.

The package is organised around one polynomial core and a stack of
constructions on top of it:

    polyring        sparse integer polynomials in the tagged variable
                    families c_i(j), d_i(j), g_i[j], h_i[j], x_i, y_i, q_i
    permutations    one-line permutations, codes and diagrams
    schubert        classical, universal and double Schubert polynomials
    specialize      g-expansion, classical/quantum/partial-flag maps
    formulas        determinantal formulas, product rule, locus classes
    uring           the universal deformation of the coinvariant ring
    cli             command line front end (``uschub``)
"""

__version__ = "0.1.0"
