"""Exact-arithmetic constructions and checks for Hopf-algebraic structures.

Subpackages cover: exact linear algebra over Q and F_p (`linalg`), algebra /
coalgebra / Hopf presentations and convolution (`algebra`), group-graded
algebras and group crossed products (`graded`), comodule algebras and Hopf
crossed products (`comodule`), Hochschild 2-cohomology and the cleft-extension
classification (`cohomology`), Hopf superalgebras and the tensor-product
decomposition (`superalg`), and a JSON file format with a CLI (`cli`).
"""

__version__ = "0.1.0"
