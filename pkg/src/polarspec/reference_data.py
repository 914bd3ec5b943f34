"""Known-good reference values for N = 32, used by the verification suite.

KNOWN_SPECTRA_N32 lists the complete spectrum {weight: count} for a set of
channel indices; entries not listed for those indices are zero (the counts
sum to 2^(32-i), so each listed spectrum is complete).

KNOWN_ORDER_N32_* are the published reliability orders at a 4 dB design SNR,
most reliable first.  GA and PW orderings depend on approximation constants
that vary between implementations, so they are treated as soft references.
"""

KNOWN_SPECTRA_N32 = {
    1: {1: 32, 3: 4960, 5: 201376, 7: 3365856, 9: 28048800,
        11: 129024480, 13: 347373600, 15: 565722720,
        17: 565722720, 19: 347373600, 21: 129024480, 23: 28048800,
        25: 3365856, 27: 201376, 29: 4960, 31: 32},
    2: {2: 256, 4: 17920, 6: 453376, 8: 5258240, 10: 32258304,
        12: 112892416, 14: 235723520, 16: 300533760,
        18: 235723520, 20: 112892416, 22: 32258304, 24: 5258240,
        26: 453376, 28: 17920, 30: 256},
    3: {2: 128, 4: 8960, 6: 226688, 8: 2629120, 10: 16129152,
        12: 56446208, 14: 117861760, 16: 150266880,
        18: 117861760, 20: 56446208, 22: 16129152, 24: 2629120,
        26: 226688, 28: 8960, 30: 128},
    17: {2: 16, 6: 560, 10: 4368, 14: 11440,
         18: 11440, 22: 4368, 26: 560, 30: 16},
    19: {4: 32, 8: 448, 12: 2016, 16: 3200, 20: 2016, 24: 448, 28: 32},
    20: {8: 256, 12: 1024, 16: 1536, 20: 1024, 24: 256},
    21: {4: 16, 8: 96, 12: 496, 16: 832, 20: 496, 24: 96, 28: 16},
    22: {8: 64, 12: 256, 16: 384, 20: 256, 24: 64},
    23: {8: 32, 12: 128, 16: 192, 20: 128, 24: 32},
    24: {16: 256},
    25: {4: 8, 12: 56, 20: 56, 28: 8},
    26: {8: 16, 16: 32, 24: 16},
    27: {8: 8, 16: 16, 24: 8},
    28: {16: 16},
    29: {8: 4, 24: 4},
    30: {16: 4},
    31: {16: 2},
    32: {32: 1},
}

KNOWN_ORDER_N32_UBW = [
    32, 31, 30, 28, 24, 16, 29, 27, 26, 23, 22, 20, 15, 14, 12, 8,
    25, 21, 19, 13, 18, 11, 10, 7, 6, 17, 4, 9, 5, 3, 2, 1,
]
KNOWN_ORDER_N32_SUBW = KNOWN_ORDER_N32_UBW

KNOWN_ORDER_N32_BHATTACHARYYA = [
    32, 31, 30, 28, 24, 16, 29, 27, 26, 23, 22, 20, 15, 14, 12, 8,
    25, 21, 19, 13, 18, 11, 10, 7, 6, 4, 17, 9, 5, 3, 2, 1,
]

# Soft references (implementation-dependent constants).
KNOWN_ORDER_N32_GA = KNOWN_ORDER_N32_BHATTACHARYYA
KNOWN_ORDER_N32_PW = [
    32, 31, 30, 28, 24, 16, 29, 27, 26, 23, 22, 15, 20, 14, 12, 25,
    8, 21, 19, 13, 18, 11, 10, 7, 6, 4, 17, 9, 5, 3, 2, 1,
]

DESIGN_SNR_DB_N32 = 4.0
