"""Values transcribed from the published tables, used as reproduction targets."""

from fractions import Fraction

F0_FRACTIONS = {
    1: Fraction(1, 2),
    2: Fraction(4, 5),
    3: Fraction(27, 26),
    4: Fraction(128, 103),
    5: Fraction(3125, 2194),
    6: Fraction(1944, 1223),
    7: Fraction(823543, 472730),
    8: Fraction(1048576, 556403),
}

LM_VALUES = {
    1: 0.75, 2: 0.72, 3: 0.7056, 4: 0.6978, 5: 0.6906, 6: 0.6860, 7: 0.6824, 8: 0.6795,
    20: 0.6638, 200: 0.6452, 500: 0.6420, 1000: 0.6404, 5000: 0.6383, 20000: 0.6375,
    50000: 0.6372, 100000: 0.6370,
}

# (family, delta, n) -> metric -> [EX, HN, MOM m=2, MOM m=8, MOM m=20]
SIM_TABLES = {
    ('EP', 1.0, 50): {'RB': [0.025, -0.414, -0.262, -0.303, -0.319], 'RRMSE': [0.148, 0.424, 0.282, 0.319, 0.334], 'EFF': [1.0, 0.348, 0.524, 0.463, 0.442]},
    ('EP', 1.0, 100): {'RB': [0.013, -0.425, -0.27, -0.311, -0.327], 'RRMSE': [0.107, 0.43, 0.281, 0.32, 0.335], 'EFF': [1.0, 0.249, 0.381, 0.335, 0.32]},
    ('EP', 1.0, 200): {'RB': [0.006, -0.43, -0.276, -0.316, -0.332], 'RRMSE': [0.074, 0.432, 0.281, 0.32, 0.336], 'EFF': [1.0, 0.171, 0.263, 0.231, 0.22]},
    ('EP', 1.5, 50): {'RB': [0.383, -0.147, -0.005, -0.061, -0.082], 'RRMSE': [0.416, 0.177, 0.118, 0.126, 0.136], 'EFF': [1.0, 2.355, 3.535, 3.291, 3.06]},
    ('EP', 1.5, 100): {'RB': [0.376, -0.154, -0.009, -0.065, -0.087], 'RRMSE': [0.394, 0.17, 0.085, 0.103, 0.116], 'EFF': [1.0, 2.317, 4.644, 3.833, 3.38]},
    ('EP', 1.5, 200): {'RB': [0.373, -0.158, -0.012, -0.067, -0.089], 'RRMSE': [0.381, 0.165, 0.059, 0.086, 0.103], 'EFF': [1.0, 2.306, 6.505, 4.419, 3.69]},
    ('EP', 2.0, 50): {'RB': [0.583, 0.013, 0.14, 0.076, 0.051], 'RRMSE': [0.607, 0.104, 0.185, 0.137, 0.123], 'EFF': [1.0, 5.861, 3.278, 4.42, 4.94]},
    ('EP', 2.0, 100): {'RB': [0.585, 0.011, 0.141, 0.077, 0.052], 'RRMSE': [0.597, 0.072, 0.165, 0.111, 0.094], 'EFF': [1.0, 8.3, 3.624, 5.378, 6.4]},
    ('EP', 2.0, 200): {'RB': [0.575, 0.0042, 0.134, 0.07, 0.045], 'RRMSE': [0.581, 0.0501, 0.147, 0.091, 0.072], 'EFF': [1.0, 11.6, 3.951, 6.407, 8.0]},
    ('HR', 2.0, 50): {'RB': [0.146, -0.409, -0.175, -0.221, -0.239], 'RRMSE': [0.254, 0.427, 0.23, 0.263, 0.276], 'EFF': [1.0, 0.595, 1.103, 0.967, 0.92]},
    ('HR', 2.0, 100): {'RB': [0.13, -0.425, -0.186, -0.232, -0.25], 'RRMSE': [0.192, 0.433, 0.213, 0.251, 0.267], 'EFF': [1.0, 0.445, 0.906, 0.766, 0.72]},
    ('HR', 2.0, 200): {'RB': [0.116, -0.435, -0.197, -0.242, -0.259], 'RRMSE': [0.152, 0.438, 0.209, 0.251, 0.268], 'EFF': [1.0, 0.348, 0.728, 0.607, 0.57]},
    ('HR', 2.5, 50): {'RB': [0.405, -0.217, 0.012, -0.045, -0.067], 'RRMSE': [0.463, 0.265, 0.161, 0.158, 0.163], 'EFF': [1.0, 1.747, 2.869, 2.922, 2.84]},
    ('HR', 2.5, 100): {'RB': [0.378, -0.24, -0.008, -0.063, -0.085], 'RRMSE': [0.404, 0.258, 0.102, 0.115, 0.126], 'EFF': [1.0, 1.564, 3.976, 3.52, 3.2]},
    ('HR', 2.5, 200): {'RB': [0.378, -0.245, -0.008, -0.064, -0.085], 'RRMSE': [0.393, 0.256, 0.078, 0.097, 0.111], 'EFF': [1.0, 1.538, 5.037, 4.048, 3.53]},
    ('HR', 3.0, 50): {'RB': [0.575, -0.062, 0.134, 0.071, 0.046], 'RRMSE': [0.614, 0.165, 0.205, 0.162, 0.15], 'EFF': [1.0, 3.715, 2.996, 3.785, 4.1]},
    ('HR', 3.0, 100): {'RB': [0.562, -0.081, 0.124, 0.061, 0.037], 'RRMSE': [0.581, 0.135, 0.164, 0.118, 0.105], 'EFF': [1.0, 4.316, 3.537, 4.912, 5.5]},
    ('HR', 3.0, 200): {'RB': [0.551, -0.093, 0.117, 0.054, 0.03], 'RRMSE': [0.561, 0.119, 0.139, 0.089, 0.075], 'EFF': [1.0, 4.713, 4.042, 6.304, 7.5]},
    ('BE', 1.5, 50): {'RB': [0.415, -0.095, 0.019, -0.038, -0.061], 'RRMSE': [0.442, 0.126, 0.11, 0.109, 0.117], 'EFF': [1.0, 3.504, 4.022, 4.052, 3.79]},
    ('BE', 1.5, 100): {'RB': [0.411, -0.0973, 0.016, -0.041, -0.063], 'RRMSE': [0.425, 0.114, 0.078, 0.083, 0.094], 'EFF': [1.0, 3.737, 5.477, 5.148, 4.51]},
    ('BE', 1.5, 200): {'RB': [0.401, -0.103, 0.009, -0.048, -0.07], 'RRMSE': [0.408, 0.111, 0.054, 0.069, 0.085], 'EFF': [1.0, 3.681, 7.62, 5.893, 4.78]},
    ('BE', 2.0, 50): {'RB': [0.355, -0.144, -0.025, -0.08, -0.101], 'RRMSE': [0.384, 0.166, 0.109, 0.128, 0.14], 'EFF': [1.0, 2.312, 3.534, 3.007, 2.74]},
    ('BE', 2.0, 100): {'RB': [0.338, -0.154, -0.036, -0.091, -0.112], 'RRMSE': [0.355, 0.165, 0.086, 0.117, 0.133], 'EFF': [1.0, 2.154, 4.135, 3.047, 2.68]},
    ('BE', 2.0, 200): {'RB': [0.333, -0.158, -0.04, -0.094, -0.115], 'RRMSE': [0.34, 0.163, 0.065, 0.106, 0.124], 'EFF': [1.0, 2.088, 5.272, 3.225, 2.74]},
    ('BE', 2.5, 50): {'RB': [0.299, -0.187, -0.065, -0.117, -0.138], 'RRMSE': [0.332, 0.204, 0.122, 0.153, 0.168], 'EFF': [1.0, 1.629, 2.719, 2.175, 1.98]},
    ('BE', 2.5, 100): {'RB': [0.289, -0.194, -0.072, -0.124, -0.145], 'RRMSE': [0.307, 0.203, 0.105, 0.144, 0.161], 'EFF': [1.0, 1.514, 2.934, 2.142, 1.91]},
    ('BE', 2.5, 200): {'RB': [0.283, -0.199, -0.076, -0.128, -0.148], 'RRMSE': [0.292, 0.203, 0.092, 0.137, 0.156], 'EFF': [1.0, 1.438, 3.159, 2.124, 1.87]},
    ('GP', 0.9, 50): {'RB': [0.189, -0.295, -0.144, -0.192, -0.211], 'RRMSE': [0.244, 0.307, 0.182, 0.219, 0.234], 'EFF': [1.0, 0.794, 1.341, 1.114, 1.04]},
    ('GP', 0.9, 100): {'RB': [0.18, -0.303, -0.15, -0.198, -0.217], 'RRMSE': [0.211, 0.308, 0.17, 0.212, 0.229], 'EFF': [1.0, 0.685, 1.241, 0.997, 0.92]},
    ('GP', 0.9, 200): {'RB': [0.17, -0.309, -0.157, -0.205, -0.223], 'RRMSE': [0.186, 0.311, 0.166, 0.211, 0.228], 'EFF': [1.0, 0.597, 1.119, 0.881, 0.81]},
    ('GP', 1.9, 50): {'RB': [0.281, -0.263, -0.077, -0.129, -0.149], 'RRMSE': [0.336, 0.292, 0.153, 0.179, 0.193], 'EFF': [1.0, 1.151, 2.197, 1.872, 1.74]},
    ('GP', 1.9, 100): {'RB': [0.272, -0.276, -0.084, -0.136, -0.155], 'RRMSE': [0.301, 0.29, 0.125, 0.161, 0.177], 'EFF': [1.0, 1.039, 2.408, 1.867, 1.7]},
    ('GP', 1.9, 200): {'RB': [0.27, -0.284, -0.086, -0.137, -0.157], 'RRMSE': [0.283, 0.289, 0.107, 0.15, 0.168], 'EFF': [1.0, 0.979, 2.659, 1.893, 1.69]},
    ('GP', 3.5, 50): {'RB': [0.453, -0.114, 0.046, -0.013, -0.036], 'RRMSE': [0.489, 0.17, 0.141, 0.126, 0.128], 'EFF': [1.0, 2.883, 3.475, 3.874, 3.83]},
    ('GP', 3.5, 100): {'RB': [0.433, -0.136, 0.032, -0.026, -0.049], 'RRMSE': [0.45, 0.162, 0.094, 0.087, 0.0947], 'EFF': [1.0, 2.781, 4.808, 5.16, 4.75]},
    ('GP', 3.5, 200): {'RB': [0.425, -0.142, 0.026, -0.032, -0.054], 'RRMSE': [0.434, 0.155, 0.07, 0.069, 0.081], 'EFF': [1.0, 2.795, 6.235, 6.307, 5.4]},
}

SIM_COLUMNS = ("EX", "HN", "MOM_m2", "MOM_m8", "MOM_m20")

# estimator -> (estimate, bootstrap mean, bias, SD, MSE, density)
STAKES_TABLE = {
    "EX": (0.16371, 0.16596, 0.00224, 0.01859, 0.00035, 0.00557),
    "HN": (0.09752, 0.09982, 0.00223, 0.01288, 0.00017, 0.00332),
    "MOM_m1": (0.12279, 0.12447, 0.00168, 0.01394, 0.00020, 0.00417),
    "MOM_m2": (0.11787, 0.11949, 0.00162, 0.01338, 0.00018, 0.00401),
    "MOM_m3": (0.11552, 0.11710, 0.00158, 0.01312, 0.00018, 0.00393),
    "MOM_m8": (0.11124, 0.11277, 0.00152, 0.01263, 0.00016, 0.00378),
    "MOM_m20": (0.10867, 0.11016, 0.00149, 0.01234, 0.00015, 0.00369),
    "MOM_m100000": (0.10429, 0.10571, 0.00143, 0.01184, 0.00014, 0.00355),
}

STAKES_TRUE_F0 = 0.110294
STAKES_TRUE_DENSITY = 0.00375
