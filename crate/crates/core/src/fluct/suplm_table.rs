//! Upper-tail quantiles of the supLM limiting distribution over a
//! k-dimensional Brownian bridge, by dimension and trimming fraction.
//!
//! Generated by `examples/gen_suplm_table.rs` (200000 paths, 1500-point grid,
//! seed 0xc0ffee). Do not edit by hand.

pub const MAX_K: usize = 12;
pub const N_TRIMS: usize = 5;
pub const N_PROBS: usize = 44;
pub const TRIMS: [f64; N_TRIMS] = [0.05, 0.1, 0.15, 0.2, 0.25];
pub const TAIL_PROBS: [f64; N_PROBS] = [0.96, 0.94, 0.92, 0.9, 0.85, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.5, 0.45, 0.4, 0.35, 0.3, 0.25, 0.22, 0.2, 0.18, 0.16, 0.14, 0.12, 0.1, 0.09, 0.08, 0.07, 0.06, 0.05, 0.045, 0.04, 0.035, 0.03, 0.025, 0.02, 0.015, 0.01, 0.008, 0.006, 0.005, 0.004, 0.003, 0.002, 0.001];

/// `QUANTILES[k-1][trim][prob]`: statistic value whose upper-tail
/// probability is `TAIL_PROBS[prob]` for a k-dimensional process.
pub const QUANTILES: [[[f64; N_PROBS]; N_TRIMS]; MAX_K] = [
    // k = 1
    [
        [
            1.616260, 1.785043, 1.931202, 2.061898, 2.350014, 2.608641, 2.852035, 3.094525,
            3.337595, 3.583582, 3.841094, 4.111817, 4.398587, 4.713960, 5.063009, 5.456407,
            5.894623, 6.200482, 6.429705, 6.687504, 6.959130, 7.273378, 7.629153, 8.048142,
            8.289146, 8.559890, 8.855242, 9.211581, 9.616666, 9.849764, 10.119612, 10.409939,
            10.751857, 11.159602, 11.629236, 12.243439, 13.100599, 13.584080, 14.157246, 14.531426,
            15.003108, 15.628078, 16.556061, 18.012985,
        ],
        [
            1.326973, 1.481854, 1.615286, 1.729995, 1.989418, 2.224756, 2.455407, 2.682925,
            2.910654, 3.146385, 3.392168, 3.652812, 3.932768, 4.235193, 4.573270, 4.955773,
            5.397919, 5.696098, 5.921043, 6.165401, 6.440158, 6.748224, 7.098579, 7.516033,
            7.753270, 8.020678, 8.316973, 8.668479, 9.072716, 9.309713, 9.565699, 9.855058,
            10.211104, 10.614344, 11.111754, 11.736657, 12.619743, 13.077093, 13.664932, 14.023620,
            14.481655, 15.110549, 16.051630, 17.672902,
        ],
        [
            1.125935, 1.259408, 1.377899, 1.485725, 1.723927, 1.942678, 2.155883, 2.370403,
            2.590660, 2.813743, 3.050352, 3.299536, 3.571565, 3.868165, 4.195740, 4.569652,
            5.006440, 5.308829, 5.527413, 5.768042, 6.030451, 6.335403, 6.687119, 7.090678,
            7.329934, 7.600323, 7.898339, 8.238657, 8.642106, 8.867979, 9.145257, 9.438777,
            9.769659, 10.184262, 10.687009, 11.314591, 12.125757, 12.642814, 13.213927, 13.615439,
            14.061849, 14.681942, 15.567217, 17.177954,
        ],
        [
            0.953994, 1.076937, 1.183035, 1.279153, 1.500210, 1.700166, 1.897034, 2.095904,
            2.303007, 2.520865, 2.749116, 2.990483, 3.249740, 3.536104, 3.858281, 4.221081,
            4.647079, 4.942505, 5.159283, 5.403253, 5.667379, 5.972781, 6.320030, 6.723733,
            6.952407, 7.213106, 7.511224, 7.852575, 8.245988, 8.477038, 8.731446, 9.030718,
            9.389360, 9.777593, 10.293993, 10.924133, 11.792893, 12.254995, 12.877811, 13.222442,
            13.701747, 14.250440, 15.137689, 16.767886,
        ],
        [
            0.803911, 0.909644, 1.003729, 1.091054, 1.288491, 1.477637, 1.663909, 1.846640,
            2.038797, 2.239289, 2.455988, 2.688452, 2.938138, 3.212835, 3.523504, 3.879060,
            4.287047, 4.581398, 4.801062, 5.035753, 5.306246, 5.595001, 5.937994, 6.341712,
            6.570093, 6.824123, 7.110043, 7.449864, 7.851750, 8.081154, 8.320831, 8.619462,
            8.949087, 9.374006, 9.847883, 10.477289, 11.401243, 11.840487, 12.434568, 12.847408,
            13.280123, 13.850635, 14.753934, 16.115376,
        ],
    ],
    // k = 2
    [
        [
            3.058070, 3.313569, 3.530445, 3.723963, 4.127963, 4.485916, 4.816737, 5.136464,
            5.453489, 5.766176, 6.088438, 6.424866, 6.779849, 7.155619, 7.566363, 8.023642,
            8.548193, 8.900539, 9.159809, 9.451189, 9.769381, 10.110375, 10.508965, 10.974319,
            11.243583, 11.537989, 11.866835, 12.257385, 12.696956, 12.953066, 13.226119, 13.542464,
            13.902974, 14.332976, 14.821970, 15.504569, 16.424997, 16.931835, 17.595620, 17.981617,
            18.440469, 19.092380, 20.011255, 21.709020,
        ],
        [
            2.616691, 2.857793, 3.058067, 3.236360, 3.626157, 3.968032, 4.288582, 4.594289,
            4.901505, 5.210382, 5.526970, 5.852968, 6.200461, 6.574778, 6.981239, 7.435651,
            7.959236, 8.314103, 8.578360, 8.861463, 9.176053, 9.527217, 9.928287, 10.393317,
            10.653923, 10.953825, 11.299325, 11.675026, 12.127970, 12.384167, 12.652674, 12.970951,
            13.334228, 13.764520, 14.294965, 14.925343, 15.862624, 16.364609, 17.023376, 17.434998,
            17.981615, 18.571816, 19.513785, 21.218001,
        ],
        [
            2.290966, 2.517969, 2.705003, 2.875421, 3.242516, 3.571348, 3.877768, 4.176644,
            4.477625, 4.778042, 5.089317, 5.410358, 5.754646, 6.123444, 6.525757, 6.977060,
            7.492524, 7.848102, 8.106673, 8.392636, 8.705737, 9.057272, 9.456911, 9.930480,
            10.191058, 10.491361, 10.824855, 11.198355, 11.652324, 11.903945, 12.185688, 12.506945,
            12.867039, 13.287081, 13.807914, 14.483970, 15.413296, 15.942190, 16.552444, 16.998196,
            17.497620, 18.164214, 19.049251, 20.784153,
        ],
        [
            2.001817, 2.216846, 2.396612, 2.552985, 2.907497, 3.218043, 3.511961, 3.801806,
            4.092606, 4.390380, 4.692082, 5.012535, 5.345784, 5.709111, 6.106297, 6.563381,
            7.076687, 7.427407, 7.682730, 7.967949, 8.285270, 8.626791, 9.025566, 9.484782,
            9.759963, 10.055892, 10.390010, 10.765427, 11.210109, 11.482063, 11.768041, 12.093707,
            12.454825, 12.868429, 13.383270, 14.059112, 14.965995, 15.506652, 16.163804, 16.552444,
            17.072907, 17.689545, 18.645521, 20.432163,
        ],
        [
            1.742604, 1.935964, 2.103236, 2.250350, 2.581842, 2.883508, 3.165716, 3.446315,
            3.730160, 4.011067, 4.307985, 4.618531, 4.949913, 5.303869, 5.696736, 6.137486,
            6.651503, 6.991863, 7.250886, 7.528019, 7.835996, 8.179958, 8.579670, 9.044339,
            9.313645, 9.611064, 9.939456, 10.314034, 10.769220, 11.030736, 11.314590, 11.635324,
            12.002833, 12.437245, 12.944544, 13.599301, 14.509125, 15.006209, 15.669236, 16.103583,
            16.580478, 17.238917, 18.153170, 19.823581,
        ],
    ],
    // k = 3
    [
        [
            4.408722, 4.734635, 4.992732, 5.223479, 5.708335, 6.138987, 6.530194, 6.897535,
            7.257627, 7.615962, 7.987561, 8.366950, 8.764142, 9.195090, 9.650431, 10.153102,
            10.724167, 11.108551, 11.397437, 11.707773, 12.053070, 12.421494, 12.861236, 13.364935,
            13.635347, 13.947389, 14.297160, 14.704176, 15.171502, 15.428668, 15.717104, 16.060618,
            16.439801, 16.887809, 17.427934, 18.125723, 19.048358, 19.573329, 20.266985, 20.713768,
            21.280154, 21.882507, 22.775647, 24.486074,
        ],
        [
            3.849186, 4.154746, 4.405458, 4.630811, 5.100935, 5.514805, 5.902381, 6.271181,
            6.626363, 6.985825, 7.346119, 7.719474, 8.117140, 8.540111, 9.009357, 9.515537,
            10.078207, 10.469669, 10.757470, 11.066098, 11.407984, 11.789047, 12.224649, 12.721828,
            13.009390, 13.329817, 13.672595, 14.062684, 14.549681, 14.809987, 15.109519, 15.437565,
            15.826300, 16.284803, 16.835154, 17.529934, 18.516780, 19.007155, 19.691681, 20.165698,
            20.726244, 21.424446, 22.303383, 24.044630,
        ],
        [
            3.428460, 3.723878, 3.964947, 4.179526, 4.636951, 5.040267, 5.414598, 5.773091,
            6.131986, 6.488601, 6.851202, 7.220990, 7.605055, 8.027167, 8.482875, 8.994181,
            9.564124, 9.949536, 10.241298, 10.561535, 10.907666, 11.277899, 11.704370, 12.207399,
            12.485351, 12.807253, 13.163461, 13.572911, 14.032787, 14.307215, 14.603299, 14.941188,
            15.328043, 15.786496, 16.338702, 17.059438, 18.063214, 18.559920, 19.206755, 19.642223,
            20.230454, 20.945236, 21.808827, 23.607450,
        ],
        [
            3.064529, 3.339689, 3.573316, 3.778295, 4.220492, 4.609347, 4.974148, 5.332643,
            5.680507, 6.032402, 6.390578, 6.760877, 7.152068, 7.564100, 8.014387, 8.519288,
            9.091558, 9.480699, 9.764379, 10.071578, 10.424018, 10.812097, 11.236307, 11.740238,
            12.028034, 12.346590, 12.700457, 13.111388, 13.587480, 13.848568, 14.143548, 14.493190,
            14.868782, 15.328073, 15.886533, 16.579562, 17.580055, 18.136590, 18.784734, 19.217442,
            19.722690, 20.458739, 21.543659, 23.138284,
        ],
        [
            2.705750, 2.976976, 3.199557, 3.397289, 3.824797, 4.201863, 4.554976, 4.897129,
            5.239213, 5.582109, 5.939729, 6.306392, 6.691117, 7.106429, 7.548562, 8.042648,
            8.615336, 9.002714, 9.287619, 9.597894, 9.941099, 10.319179, 10.764104, 11.252756,
            11.536866, 11.859574, 12.213886, 12.617842, 13.103317, 13.378586, 13.661160, 13.997153,
            14.385297, 14.837235, 15.397364, 16.110289, 17.102966, 17.639634, 18.358014, 18.759140,
            19.256437, 19.968456, 20.958055, 22.586164,
        ],
    ],
    // k = 4
    [
        [
            5.697063, 6.067276, 6.374730, 6.643402, 7.206303, 7.689762, 8.119536, 8.533374,
            8.933901, 9.331738, 9.735236, 10.152290, 10.583708, 11.040568, 11.537755, 12.090684,
            12.699581, 13.121105, 13.426210, 13.748220, 14.098262, 14.513605, 14.958829, 15.488124,
            15.799402, 16.116721, 16.490110, 16.925145, 17.406283, 17.690820, 17.990815, 18.315550,
            18.729067, 19.191317, 19.764504, 20.532856, 21.578602, 22.115937, 22.800543, 23.217651,
            23.752499, 24.462510, 25.376440, 27.091859,
        ],
        [
            5.049042, 5.414026, 5.701918, 5.956772, 6.511439, 6.989931, 7.421324, 7.827907,
            8.225352, 8.627876, 9.034641, 9.445359, 9.882546, 10.341751, 10.838959, 11.382675,
            12.008544, 12.421358, 12.727452, 13.060192, 13.423543, 13.815908, 14.270379, 14.804947,
            15.097927, 15.446064, 15.836793, 16.260154, 16.762794, 17.063788, 17.366389, 17.709455,
            18.109098, 18.576860, 19.120649, 19.878990, 20.934274, 21.542039, 22.259237, 22.690723,
            23.192557, 23.920051, 24.951277, 26.704387,
        ],
        [
            4.553486, 4.903833, 5.189597, 5.442765, 5.972408, 6.438348, 6.872381, 7.276456,
            7.673827, 8.070977, 8.475183, 8.891163, 9.320118, 9.775984, 10.269825, 10.819296,
            11.433704, 11.859216, 12.160510, 12.492507, 12.858702, 13.264176, 13.720701, 14.250898,
            14.560560, 14.885563, 15.266091, 15.710253, 16.215594, 16.499077, 16.819167, 17.192266,
            17.600882, 18.085746, 18.641086, 19.370804, 20.446858, 20.997202, 21.799885, 22.219529,
            22.746007, 23.420622, 24.448507, 26.075878,
        ],
        [
            4.114978, 4.456048, 4.733250, 4.974091, 5.496565, 5.948721, 6.370779, 6.779372,
            7.171961, 7.560080, 7.959379, 8.374165, 8.810045, 9.261055, 9.755984, 10.301227,
            10.922516, 11.345448, 11.646628, 11.987480, 12.344476, 12.754538, 13.217193, 13.751258,
            14.056124, 14.397388, 14.766741, 15.193673, 15.704292, 16.003289, 16.314744, 16.667425,
            17.096024, 17.592071, 18.171192, 18.908971, 19.951862, 20.553690, 21.320779, 21.823162,
            22.351627, 22.980584, 23.986978, 25.531240,
        ],
        [
            3.694123, 4.025364, 4.293545, 4.526669, 5.034714, 5.475770, 5.883899, 6.281746,
            6.675194, 7.067535, 7.458307, 7.870866, 8.298154, 8.757410, 9.241787, 9.791565,
            10.399730, 10.821143, 11.122221, 11.464864, 11.840903, 12.251686, 12.704494, 13.233956,
            13.541769, 13.866510, 14.236780, 14.668726, 15.167530, 15.468345, 15.781838, 16.144245,
            16.556786, 17.043631, 17.632156, 18.381818, 19.414796, 20.024168, 20.766937, 21.251581,
            21.834097, 22.511216, 23.488104, 25.114353,
        ],
    ],
    // k = 5
    [
        [
            6.961032, 7.391727, 7.732120, 8.025373, 8.626629, 9.149662, 9.625465, 10.070092,
            10.508604, 10.944956, 11.376718, 11.818141, 12.283998, 12.771003, 13.297516, 13.882829,
            14.518476, 14.957869, 15.267027, 15.617296, 15.996736, 16.413427, 16.894898, 17.443392,
            17.757418, 18.095928, 18.474138, 18.912660, 19.438263, 19.744860, 20.059574, 20.429519,
            20.842556, 21.365276, 21.953626, 22.720527, 23.758486, 24.267025, 25.047501, 25.460585,
            25.970808, 26.698094, 27.720859, 29.380192,
        ],
        [
            6.219353, 6.630083, 6.965018, 7.257602, 7.870178, 8.391440, 8.866704, 9.312668,
            9.744197, 10.175743, 10.611200, 11.064417, 11.522698, 12.015790, 12.552891, 13.131419,
            13.788780, 14.219241, 14.540152, 14.891085, 15.265223, 15.695032, 16.181876, 16.750233,
            17.068131, 17.410394, 17.798888, 18.243053, 18.755043, 19.057485, 19.393725, 19.773300,
            20.182208, 20.674253, 21.307847, 22.082373, 23.145267, 23.717891, 24.409300, 24.938049,
            25.434197, 26.115891, 27.120569, 28.848937,
        ],
        [
            5.654127, 6.045689, 6.383597, 6.662773, 7.272157, 7.794334, 8.269582, 8.709703,
            9.144970, 9.567768, 10.005817, 10.450909, 10.918507, 11.411839, 11.939298, 12.530778,
            13.182045, 13.633518, 13.957164, 14.298933, 14.687553, 15.111639, 15.602348, 16.158565,
            16.479566, 16.840349, 17.227920, 17.682483, 18.218724, 18.503573, 18.839289, 19.239997,
            19.662342, 20.160400, 20.759463, 21.533268, 22.639752, 23.174743, 23.889053, 24.352154,
            25.006910, 25.595330, 26.610865, 28.440836,
        ],
        [
            5.155137, 5.540545, 5.860120, 6.135548, 6.733990, 7.254268, 7.724243, 8.165961,
            8.591515, 9.021284, 9.449011, 9.897752, 10.359359, 10.861804, 11.390959, 11.977105,
            12.645318, 13.087202, 13.414945, 13.774203, 14.155085, 14.577921, 15.059547, 15.626714,
            15.935519, 16.277003, 16.691861, 17.139310, 17.682772, 17.982737, 18.327025, 18.692461,
            19.138220, 19.654814, 20.242854, 21.025768, 22.149202, 22.735798, 23.441562, 23.872541,
            24.405571, 25.149577, 26.098841, 27.898365,
        ],
        [
            4.678001, 5.051813, 5.363601, 5.632599, 6.210817, 6.714154, 7.188538, 7.628444,
            8.059935, 8.481938, 8.907270, 9.347553, 9.817719, 10.308603, 10.839596, 11.426878,
            12.098999, 12.547403, 12.869669, 13.221872, 13.611659, 14.034082, 14.510321, 15.066434,
            15.388208, 15.730567, 16.119079, 16.566851, 17.109986, 17.408862, 17.749336, 18.110626,
            18.539528, 19.057853, 19.705880, 20.479470, 21.586795, 22.179866, 22.918334, 23.360329,
            23.912642, 24.687200, 25.584243, 27.363224,
        ],
    ],
    // k = 6
    [
        [
            8.221539, 8.675160, 9.043093, 9.356890, 10.027446, 10.590021, 11.094047, 11.568656,
            12.030339, 12.488106, 12.957839, 13.440779, 13.928142, 14.437121, 14.989106, 15.581205,
            16.253691, 16.712471, 17.044250, 17.408591, 17.813384, 18.247323, 18.728815, 19.318128,
            19.663455, 20.007249, 20.414173, 20.894387, 21.421672, 21.718560, 22.066315, 22.450509,
            22.883914, 23.380510, 23.993644, 24.776859, 25.852234, 26.447141, 27.185210, 27.684892,
            28.246993, 28.959886, 30.067823, 32.009431,
        ],
        [
            7.388535, 7.842380, 8.212982, 8.532978, 9.201430, 9.763674, 10.275572, 10.755119,
            11.215587, 11.677498, 12.142219, 12.616945, 13.118797, 13.641407, 14.190223, 14.794247,
            15.473538, 15.952114, 16.284629, 16.649945, 17.048994, 17.497944, 17.996971, 18.563526,
            18.895260, 19.269116, 19.700476, 20.158371, 20.726899, 21.029299, 21.378225, 21.750850,
            22.188523, 22.702595, 23.349597, 24.149552, 25.252331, 25.844074, 26.633972, 27.102342,
            27.687005, 28.409599, 29.597629, 31.577450,
        ],
        [
            6.748315, 7.208219, 7.574907, 7.893945, 8.552885, 9.121436, 9.625195, 10.109019,
            10.575130, 11.032498, 11.494943, 11.968279, 12.459405, 12.995281, 13.563563, 14.168604,
            14.857204, 15.318523, 15.668568, 16.038084, 16.432473, 16.884347, 17.382682, 17.978156,
            18.302813, 18.659241, 19.083295, 19.587130, 20.125575, 20.453804, 20.831398, 21.214695,
            21.641376, 22.152925, 22.787457, 23.587894, 24.674064, 25.268282, 25.995962, 26.514566,
            27.127668, 27.897327, 29.016877, 30.937362,
        ],
        [
            6.200948, 6.637643, 7.000340, 7.317618, 7.968555, 8.524946, 9.043470, 9.515513,
            9.977797, 10.441561, 10.903348, 11.371772, 11.869193, 12.395446, 12.968231, 13.589306,
            14.285452, 14.754640, 15.094613, 15.455128, 15.873398, 16.312971, 16.821916, 17.405632,
            17.749020, 18.116939, 18.520949, 19.009244, 19.605017, 19.912190, 20.261608, 20.668768,
            21.124253, 21.645822, 22.267068, 23.078665, 24.199272, 24.760584, 25.498555, 25.956501,
            26.569850, 27.404331, 28.448389, 30.467518,
        ],
        [
            5.666652, 6.093560, 6.436709, 6.740192, 7.395468, 7.950008, 8.451185, 8.938779,
            9.396378, 9.852603, 10.324397, 10.794866, 11.281011, 11.807733, 12.373006, 13.006672,
            13.706878, 14.177922, 14.526768, 14.891066, 15.285932, 15.740049, 16.248790, 16.829522,
            17.170380, 17.535293, 17.957393, 18.420847, 18.963362, 19.305056, 19.670355, 20.048545,
            20.511653, 21.051243, 21.693253, 22.513352, 23.609951, 24.239994, 25.000215, 25.463807,
            25.992157, 26.890418, 27.947780, 30.067818,
        ],
    ],
    // k = 7
    [
        [
            9.427572, 9.921067, 10.322223, 10.656652, 11.366970, 11.970861, 12.503457, 13.013898,
            13.514773, 13.998259, 14.489294, 14.979410, 15.488571, 16.026513, 16.599622, 17.229689,
            17.945907, 18.426445, 18.771036, 19.150163, 19.563077, 20.018567, 20.535298, 21.130478,
            21.455516, 21.827144, 22.259807, 22.732806, 23.268825, 23.573168, 23.915759, 24.294488,
            24.721359, 25.253771, 25.875675, 26.673158, 27.831679, 28.428237, 29.318069, 29.773723,
            30.349963, 31.066568, 32.154376, 33.922974,
        ],
        [
            8.553511, 9.040981, 9.441435, 9.774238, 10.490961, 11.086433, 11.629755, 12.146975,
            12.637659, 13.130982, 13.623995, 14.121849, 14.644626, 15.193018, 15.774492, 16.419222,
            17.137613, 17.614137, 17.970901, 18.357930, 18.769286, 19.236961, 19.745655, 20.350296,
            20.698783, 21.074655, 21.478626, 21.964117, 22.538377, 22.857662, 23.196645, 23.588409,
            24.026494, 24.543634, 25.179583, 25.989683, 27.132419, 27.779757, 28.521780, 29.097961,
            29.758899, 30.521835, 31.586077, 33.484389,
        ],
        [
            7.867401, 8.352992, 8.754189, 9.093483, 9.800377, 10.408975, 10.944999, 11.457183,
            11.957396, 12.443344, 12.936266, 13.442992, 13.966800, 14.520463, 15.107362, 15.752657,
            16.483377, 16.966650, 17.328015, 17.705773, 18.133918, 18.600157, 19.120687, 19.721933,
            20.068444, 20.450936, 20.882682, 21.362467, 21.922455, 22.258549, 22.629304, 23.012701,
            23.464398, 23.972811, 24.604459, 25.425644, 26.569066, 27.182036, 27.988091, 28.480015,
            29.174331, 29.989245, 31.104793, 33.036528,
        ],
        [
            7.254954, 7.739797, 8.129709, 8.457889, 9.168129, 9.771460, 10.317537, 10.825216,
            11.317783, 11.813703, 12.307859, 12.817738, 13.337260, 13.890516, 14.494867, 15.137719,
            15.868834, 16.365102, 16.715790, 17.106851, 17.524991, 18.008590, 18.534981, 19.149044,
            19.497119, 19.885983, 20.318384, 20.808408, 21.374647, 21.694554, 22.049152, 22.463866,
            22.910338, 23.464397, 24.085568, 24.899192, 26.054998, 26.653925, 27.453221, 27.975837,
            28.575980, 29.463785, 30.542195, 32.472797,
        ],
        [
            6.665855, 7.127384, 7.516709, 7.849146, 8.551714, 9.147118, 9.699611, 10.214945,
            10.707787, 11.197229, 11.689688, 12.196754, 12.723121, 13.276533, 13.863964, 14.531123,
            15.256983, 15.746759, 16.110271, 16.504235, 16.919319, 17.384195, 17.921253, 18.539854,
            18.888893, 19.272311, 19.695825, 20.195557, 20.766304, 21.100146, 21.446568, 21.859419,
            22.328613, 22.870095, 23.514744, 24.343279, 25.493643, 26.116473, 26.891977, 27.402211,
            28.023938, 28.808117, 29.995545, 31.987954,
        ],
    ],
    // k = 8
    [
        [
            10.619687, 11.147458, 11.576949, 11.942317, 12.688359, 13.314836, 13.889936, 14.429189,
            14.952915, 15.463775, 15.971127, 16.483694, 17.011518, 17.572153, 18.175482, 18.844793,
            19.586400, 20.084292, 20.444843, 20.828771, 21.268104, 21.736531, 22.272693, 22.879838,
            23.239672, 23.620733, 24.058501, 24.534012, 25.070847, 25.392464, 25.745863, 26.139839,
            26.596611, 27.135954, 27.759833, 28.590218, 29.814834, 30.463459, 31.250163, 31.739159,
            32.350940, 33.185378, 34.271054, 36.061138,
        ],
        [
            9.694312, 10.218217, 10.646274, 11.001561, 11.758833, 12.395692, 12.967316, 13.500811,
            14.024458, 14.542869, 15.068684, 15.598810, 16.138297, 16.713006, 17.311378, 17.985177,
            18.737686, 19.246605, 19.605426, 20.003581, 20.432208, 20.910056, 21.463419, 22.079076,
            22.426811, 22.814660, 23.267868, 23.759846, 24.335433, 24.648425, 25.001131, 25.406083,
            25.867731, 26.400027, 27.054876, 27.890783, 29.121394, 29.780382, 30.597236, 31.100263,
            31.714136, 32.506532, 33.705432, 35.535413,
        ],
        [
            8.958302, 9.481201, 9.906716, 10.275326, 11.030264, 11.668276, 12.246039, 12.781694,
            13.303114, 13.820999, 14.342481, 14.886839, 15.434110, 16.004955, 16.625395, 17.291082,
            18.052728, 18.558777, 18.939486, 19.329620, 19.757739, 20.248035, 20.792331, 21.443058,
            21.801635, 22.192748, 22.631232, 23.141074, 23.717805, 24.065615, 24.418738, 24.808439,
            25.266431, 25.829281, 26.466584, 27.307708, 28.491999, 29.147091, 29.974298, 30.517392,
            31.148073, 31.983533, 33.152883, 34.798634,
        ],
        [
            8.295007, 8.818389, 9.243801, 9.603137, 10.367487, 10.996744, 11.574675, 12.113100,
            12.644126, 13.159239, 13.681928, 14.217700, 14.776122, 15.353032, 15.972864, 16.658677,
            17.407060, 17.928957, 18.297784, 18.705601, 19.147566, 19.624221, 20.175980, 20.819012,
            21.191487, 21.595715, 22.041793, 22.537864, 23.134420, 23.476655, 23.833494, 24.248130,
            24.698105, 25.251228, 25.925194, 26.752358, 27.878894, 28.571061, 29.412113, 29.954144,
            30.568049, 31.414588, 32.511953, 34.372216,
        ],
        [
            7.666742, 8.169869, 8.587606, 8.945516, 9.699770, 10.340532, 10.913957, 11.455510,
            11.979964, 12.504408, 13.028385, 13.565547, 14.119533, 14.707408, 15.332337, 16.017436,
            16.778497, 17.283382, 17.651018, 18.060370, 18.507883, 19.008520, 19.546382, 20.185523,
            20.564253, 20.957940, 21.405497, 21.921628, 22.528725, 22.865767, 23.240844, 23.639813,
            24.115201, 24.660756, 25.315890, 26.174440, 27.359797, 27.966758, 28.843001, 29.325913,
            30.009219, 30.847758, 32.083403, 33.940520,
        ],
    ],
    // k = 9
    [
        [
            11.832401, 12.382756, 12.820661, 13.206182, 13.996511, 14.664390, 15.267800, 15.830538,
            16.363497, 16.891042, 17.415954, 17.950153, 18.509671, 19.104476, 19.733014, 20.415032,
            21.174324, 21.684278, 22.045720, 22.461235, 22.892449, 23.376690, 23.943575, 24.575000,
            24.932383, 25.326931, 25.746359, 26.243491, 26.816288, 27.170188, 27.523463, 27.914026,
            28.389155, 28.939225, 29.629738, 30.522408, 31.648201, 32.283883, 33.039781, 33.562565,
            34.236228, 34.939847, 36.105205, 37.857085,
        ],
        [
            10.835014, 11.395411, 11.844058, 12.222267, 13.016493, 13.683264, 14.284377, 14.853003,
            15.400947, 15.945538, 16.484542, 17.028808, 17.595871, 18.191054, 18.827157, 19.521135,
            20.312735, 20.820981, 21.194725, 21.602686, 22.035456, 22.541040, 23.087356, 23.752389,
            24.124818, 24.514371, 24.969483, 25.471701, 26.059658, 26.384110, 26.748550, 27.178957,
            27.619596, 28.180582, 28.872873, 29.738529, 30.948694, 31.580530, 32.406061, 32.908369,
            33.562559, 34.395186, 35.374720, 37.298057,
        ],
        [
            10.052847, 10.620647, 11.070853, 11.451583, 12.237584, 12.912190, 13.517539, 14.090981,
            14.641380, 15.181707, 15.725499, 16.290476, 16.861056, 17.460354, 18.101097, 18.802752,
            19.592703, 20.128237, 20.508247, 20.913815, 21.370377, 21.858826, 22.430350, 23.070137,
            23.456359, 23.864145, 24.318597, 24.852339, 25.424185, 25.745022, 26.121669, 26.542118,
            27.024589, 27.577280, 28.229948, 29.124871, 30.351168, 30.955197, 31.762917, 32.288322,
            32.938644, 33.800865, 34.830060, 36.824427,
        ],
        [
            9.341119, 9.899423, 10.341136, 10.728085, 11.538993, 12.195923, 12.814149, 13.396209,
            13.944365, 14.485863, 15.032124, 15.587364, 16.168137, 16.780477, 17.428353, 18.135460,
            18.930498, 19.456831, 19.850058, 20.273060, 20.725134, 21.226747, 21.787806, 22.449209,
            22.803156, 23.219417, 23.698006, 24.218778, 24.836550, 25.161859, 25.538467, 25.962537,
            26.426264, 26.988364, 27.649536, 28.504140, 29.749967, 30.445667, 31.247723, 31.739883,
            32.389292, 33.163999, 34.320272, 36.269542,
        ],
        [
            8.648587, 9.203957, 9.648759, 10.027875, 10.837379, 11.515116, 12.118384, 12.693953,
            13.256501, 13.801746, 14.348530, 14.899567, 15.483186, 16.093869, 16.755550, 17.460217,
            18.261159, 18.786540, 19.185065, 19.600522, 20.066888, 20.578144, 21.150406, 21.793243,
            22.171291, 22.591905, 23.051714, 23.584006, 24.174609, 24.506355, 24.919920, 25.342606,
            25.814884, 26.366589, 27.070311, 27.915138, 29.165925, 29.811914, 30.668362, 31.211132,
            31.842228, 32.647535, 33.809842, 35.691864,
        ],
    ],
    // k = 10
    [
        [
            13.004466, 13.583732, 14.055817, 14.458997, 15.285027, 15.984691, 16.610405, 17.188762,
            17.741365, 18.287503, 18.839507, 19.399529, 19.979276, 20.580530, 21.219013, 21.931593,
            22.735883, 23.265709, 23.657796, 24.078595, 24.526714, 25.020485, 25.577511, 26.228237,
            26.592146, 26.992330, 27.430899, 27.940701, 28.527227, 28.859525, 29.238566, 29.649174,
            30.142228, 30.719795, 31.414643, 32.283092, 33.497768, 34.140286, 34.950475, 35.441992,
            36.083504, 36.840022, 37.942484, 39.781499,
        ],
        [
            11.959812, 12.537333, 13.016901, 13.415113, 14.253026, 14.956565, 15.587583, 16.185795,
            16.755551, 17.308209, 17.870161, 18.433702, 19.026223, 19.636720, 20.298695, 21.009964,
            21.812248, 22.352814, 22.752339, 23.167912, 23.641886, 24.163689, 24.725631, 25.390887,
            25.774110, 26.184330, 26.631360, 27.137835, 27.728883, 28.078214, 28.461313, 28.863604,
            29.367906, 29.936334, 30.662846, 31.550151, 32.812221, 33.459117, 34.313412, 34.839756,
            35.433959, 36.313082, 37.438161, 39.269358,
        ],
        [
            11.141865, 11.727880, 12.193132, 12.580828, 13.428571, 14.133766, 14.771702, 15.369141,
            15.953599, 16.526268, 17.092116, 17.668436, 18.263867, 18.890126, 19.555520, 20.278050,
            21.080833, 21.625590, 22.019983, 22.456821, 22.930810, 23.453065, 24.048954, 24.707224,
            25.090783, 25.502251, 25.981357, 26.489236, 27.103116, 27.433871, 27.830545, 28.241802,
            28.712445, 29.280067, 29.979866, 30.873747, 32.140131, 32.858928, 33.737947, 34.261328,
            34.861706, 35.643739, 36.816591, 38.741933,
        ],
        [
            10.376968, 10.964643, 11.430769, 11.835529, 12.673531, 13.402737, 14.047148, 14.641894,
            15.224290, 15.791035, 16.370508, 16.952682, 17.550396, 18.181860, 18.856137, 19.583970,
            20.408245, 20.947481, 21.337238, 21.777573, 22.256109, 22.781715, 23.380966, 24.071510,
            24.456737, 24.867259, 25.339004, 25.880293, 26.471886, 26.820673, 27.209983, 27.632352,
            28.112149, 28.682567, 29.389615, 30.278741, 31.557824, 32.218143, 33.125684, 33.618863,
            34.302568, 35.140937, 36.314379, 38.069977,
        ],
        [
            9.651562, 10.228485, 10.704789, 11.101530, 11.957133, 12.669439, 13.324192, 13.922430,
            14.502312, 15.076614, 15.648676, 16.236506, 16.838750, 17.477279, 18.148035, 18.887087,
            19.717795, 20.275134, 20.671692, 21.092588, 21.562247, 22.096829, 22.702785, 23.394094,
            23.800924, 24.215070, 24.676295, 25.198860, 25.822862, 26.166631, 26.556299, 26.995598,
            27.481002, 28.065947, 28.759933, 29.654188, 30.913185, 31.610024, 32.510542, 33.072525,
            33.693192, 34.523944, 35.686215, 37.525804,
        ],
    ],
    // k = 11
    [
        [
            14.173541, 14.784075, 15.250777, 15.679702, 16.553474, 17.280041, 17.917691, 18.523628,
            19.103713, 19.676706, 20.248010, 20.825133, 21.407513, 22.031319, 22.703520, 23.439421,
            24.262063, 24.804096, 25.204766, 25.638935, 26.105885, 26.615774, 27.193783, 27.841845,
            28.216270, 28.639489, 29.092465, 29.613753, 30.231900, 30.576174, 30.975869, 31.418792,
            31.895721, 32.522386, 33.223896, 34.123721, 35.297784, 36.019602, 36.854310, 37.299854,
            37.992746, 38.742662, 39.834212, 41.545704,
        ],
        [
            13.095184, 13.702675, 14.181519, 14.599266, 15.466215, 16.212725, 16.868971, 17.484906,
            18.072156, 18.653840, 19.239210, 19.838525, 20.442514, 21.071686, 21.746494, 22.479868,
            23.316894, 23.870236, 24.278774, 24.715391, 25.196944, 25.731818, 26.312504, 26.989244,
            27.355484, 27.772703, 28.241885, 28.777948, 29.385767, 29.737800, 30.145085, 30.588141,
            31.125340, 31.715866, 32.443496, 33.357366, 34.590897, 35.205546, 36.098024, 36.604738,
            37.211563, 38.195756, 39.369817, 41.007839,
        ],
        [
            12.199231, 12.819007, 13.332131, 13.747006, 14.614209, 15.355788, 16.023862, 16.656963,
            17.260465, 17.847946, 18.434023, 19.038862, 19.654873, 20.293185, 20.974402, 21.722689,
            22.549722, 23.123221, 23.524361, 23.971464, 24.459330, 25.000933, 25.598681, 26.282195,
            26.664807, 27.092407, 27.558939, 28.104535, 28.735787, 29.079848, 29.483379, 29.921290,
            30.416846, 31.049375, 31.773079, 32.721640, 34.001163, 34.633563, 35.420527, 36.019023,
            36.683076, 37.537277, 38.703548, 40.520763,
        ],
        [
            11.411573, 12.018617, 12.515198, 12.945323, 13.846830, 14.592183, 15.257605, 15.887113,
            16.497523, 17.093276, 17.686525, 18.286868, 18.907417, 19.563460, 20.252982, 21.002147,
            21.845572, 22.405209, 22.819726, 23.272769, 23.759168, 24.318248, 24.932838, 25.631658,
            26.020270, 26.439050, 26.917725, 27.450309, 28.079487, 28.444727, 28.851608, 29.289775,
            29.792479, 30.390414, 31.142647, 32.040530, 33.355728, 34.057375, 34.848839, 35.352661,
            36.054396, 36.885799, 38.153341, 39.955413,
        ],
        [
            10.638956, 11.260368, 11.753198, 12.176308, 13.077641, 13.829094, 14.500714, 15.135083,
            15.739640, 16.346353, 16.941041, 17.549929, 18.171505, 18.825804, 19.532631, 20.288577,
            21.139153, 21.705096, 22.103783, 22.551251, 23.052030, 23.599767, 24.225979, 24.930581,
            25.329379, 25.777967, 26.259803, 26.806814, 27.415783, 27.785773, 28.170149, 28.621617,
            29.126014, 29.731261, 30.454420, 31.417109, 32.745167, 33.461951, 34.287970, 34.803135,
            35.412290, 36.325492, 37.547801, 39.530802,
        ],
    ],
    // k = 12
    [
        [
            15.331322, 15.957449, 16.467735, 16.912992, 17.816432, 18.556719, 19.232309, 19.855865,
            20.455750, 21.037720, 21.623771, 22.218975, 22.828062, 23.461233, 24.156467, 24.912947,
            25.739506, 26.298964, 26.699112, 27.141956, 27.621977, 28.132757, 28.735444, 29.397642,
            29.780309, 30.201681, 30.679090, 31.218533, 31.872728, 32.239932, 32.645635, 33.114597,
            33.621798, 34.220900, 34.952249, 35.785874, 37.060377, 37.708282, 38.524777, 39.040462,
            39.697833, 40.505094, 41.588017, 43.494172,
        ],
        [
            14.176098, 14.830564, 15.337108, 15.774102, 16.686709, 17.454059, 18.131669, 18.770328,
            19.387393, 19.991713, 20.590632, 21.191832, 21.813874, 22.468361, 23.164608, 23.917327,
            24.785965, 25.359338, 25.763551, 26.211224, 26.693777, 27.240000, 27.830218, 28.509969,
            28.904376, 29.325746, 29.799071, 30.347966, 31.001708, 31.362594, 31.789509, 32.267083,
            32.795347, 33.404090, 34.111240, 35.061902, 36.247560, 36.921225, 37.804008, 38.363970,
            38.973493, 39.780134, 40.954213, 42.855686,
        ],
        [
            13.260185, 13.917221, 14.432359, 14.885915, 15.793283, 16.571867, 17.277908, 17.914705,
            18.534113, 19.153620, 19.760718, 20.371109, 20.999093, 21.664270, 22.370153, 23.143319,
            23.996077, 24.575480, 25.004964, 25.464666, 25.955123, 26.500656, 27.111753, 27.809426,
            28.190528, 28.625846, 29.109671, 29.650313, 30.285690, 30.661073, 31.063174, 31.536908,
            32.076700, 32.718995, 33.450751, 34.374645, 35.577248, 36.231934, 37.117032, 37.693103,
            38.425344, 39.228678, 40.442818, 42.385650,
        ],
        [
            12.438129, 13.085026, 13.610232, 14.061399, 14.991148, 15.765047, 16.472925, 17.131650,
            17.754258, 18.367797, 18.983862, 19.607111, 20.242088, 20.910406, 21.618398, 22.390733,
            23.268099, 23.854608, 24.285491, 24.743060, 25.259523, 25.809774, 26.415390, 27.125379,
            27.528796, 27.959993, 28.434368, 29.004709, 29.632260, 30.004199, 30.407601, 30.848511,
            31.384262, 32.045984, 32.823544, 33.766883, 35.068199, 35.662768, 36.498598, 37.051473,
            37.840392, 38.687704, 39.834686, 41.717989,
        ],
        [
            11.618972, 12.279441, 12.798610, 13.249887, 14.190961, 14.978409, 15.676244, 16.342337,
            16.976673, 17.590764, 18.207055, 18.827396, 19.486713, 20.156830, 20.875892, 21.656995,
            22.532415, 23.124257, 23.550649, 24.000214, 24.505587, 25.082352, 25.713958, 26.425989,
            26.837387, 27.277006, 27.780578, 28.316785, 28.962737, 29.327801, 29.738767, 30.208465,
            30.719670, 31.343785, 32.138878, 33.114721, 34.416883, 35.143740, 35.954399, 36.442440,
            37.168520, 38.093256, 39.189115, 41.133129,
        ],
    ],
];
