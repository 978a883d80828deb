"""identlab: special functions and a verification harness for exact identities.

Modules
-------
numkernel
    Error-tracked numbers, quadrature, series acceleration, check results.
qfun
    q-Pochhammer symbols, theta functions, complete elliptic integrals.
quadseries
    Quadratic-exponential series, Gauss sums and Fresnel-type integrals.
gaussfusion
    Fourier-Gauss transforms, Askey q-beta integrals and their fusion.
charsum
    Odd Dirichlet characters, sampling formulas and step-weighted transforms.
hyperfourier
    Hypergeometric series and their Fourier expansions.
prodilog
    Dilogarithms, character-twisted infinite products, generalized trig functions.
harness
    Identity registry, batch runner, reports and the command-line interface.
"""

__version__ = "0.1.0"
