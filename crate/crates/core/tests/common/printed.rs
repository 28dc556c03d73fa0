/// Reference cell endpoints for tables 1-6, `[table][row][column] = (left, right)`.
pub const PRINTED: [[[(f64, f64); 4]; 5]; 6] = [
    [
        [(0.3333, 0.3750), (0.4285, 0.4736), (0.4594, 0.5050), (0.5000, 0.5454)],
        [(0.3750, 0.4118), (0.4736, 0.5122), (0.5050, 0.5434), (0.5454, 0.5833)],
        [(0.4118, 0.4444), (0.5122, 0.5454), (0.5434, 0.5762), (0.5833, 0.6154)],
        [(0.4444, 0.4736), (0.5454, 0.5744), (0.5762, 0.6047), (0.6154, 0.6428)],
        [(0.4736, 0.5000), (0.5744, 0.6000), (0.6047, 0.6296), (0.6428, 0.6666)],
    ],
    [
        [(0.1835, 0.2094), (0.2330, 0.2628), (0.2745, 0.3066), (0.2928, 0.3258)],
        [(0.2094, 0.2330), (0.2628, 0.2893), (0.3066, 0.3348), (0.3258, 0.3545)],
        [(0.2330, 0.2546), (0.2893, 0.3132), (0.3348, 0.3598), (0.3545, 0.3798)],
        [(0.2546, 0.2745), (0.3132, 0.3348), (0.3598, 0.3822), (0.3798, 0.4023)],
        [(0.2745, 0.2928), (0.3348, 0.3545), (0.3822, 0.4023), (0.4023, 0.4226)],
    ],
    [
        [(0.2679, 0.2967), (0.3333, 0.3640), (0.3640, 0.3951), (0.3820, 0.4132)],
        [(0.2967, 0.3218), (0.3640, 0.3903), (0.3951, 0.4216), (0.4132, 0.4396)],
        [(0.3218, 0.3441), (0.3903, 0.4132), (0.4216, 0.4444), (0.4396, 0.4624)],
        [(0.3441, 0.3640), (0.4132, 0.4334), (0.4444, 0.4645), (0.4624, 0.4823)],
        [(0.3640, 0.3820), (0.4334, 0.4514), (0.4645, 0.4823), (0.4823, 0.5000)],
    ],
    [
        [(0.2068, 0.2264), (0.2353, 0.2558), (0.2588, 0.2799), (0.2848, 0.3064)],
        [(0.2264, 0.2436), (0.2558, 0.2737), (0.2799, 0.2982), (0.3064, 0.3250)],
        [(0.2436, 0.2588), (0.2737, 0.2894), (0.2982, 0.3141), (0.3250, 0.3412)],
        [(0.2588, 0.2724), (0.2894, 0.3034), (0.3141, 0.3284), (0.3412, 0.3555)],
        [(0.2724, 0.2848), (0.3034, 0.3160), (0.3284, 0.3412), (0.3555, 0.3684)],
    ],
    [
        [(0.5335, 0.6054), (0.9860, 0.9876), (0.9937, 0.9943), (0.9961, 0.9966)],
        [(0.6054, 0.6434), (0.9876, 0.9885), (0.9945, 0.9949), (0.9966, 0.9968)],
        [(0.6434, 0.6756), (0.9885, 0.9892), (0.9949, 0.9952), (0.9968, 0.9970)],
        [(0.6756, 0.7031), (0.9892, 0.9899), (0.9952, 0.9955), (0.9970, 0.9972)],
        [(0.7031, 0.7153), (0.9899, 0.9902), (0.9955, 0.9956), (0.9972, 0.9973)],
    ],
    [
        [(0.5828, 0.6419), (0.4742, 0.5789), (0.4317, 0.4833), (0.4090, 0.4587)],
        [(0.6419, 0.6912), (0.5289, 0.5759), (0.4833, 0.5282), (0.4587, 0.5021)],
        [(0.6912, 0.7324), (0.5759, 0.6168), (0.5282, 0.5675), (0.5021, 0.5403)],
        [(0.7324, 0.7672), (0.6168, 0.6525), (0.5675, 0.6023), (0.5403, 0.5743)],
        [(0.7672, 0.7968), (0.6525, 0.6838), (0.6023, 0.6331), (0.5743, 0.6045)],
    ],
];
