//! Generated by `cargo run -p cliffordt --example gen_push_tables`; do not edit.
//!
//! Entries are `action << 8 | tail`, see `TPush::encode`.

pub(crate) static MA_T_PUSH: [[u16; 192]; 4] = [
    [
        0x0000, 0x0001, 0x0002, 0x0003, 0x0004, 0x0005, 0x0006, 0x0007, 0x0008, 0x0009, 0x000a, 0x000b,
        0x000c, 0x000d, 0x000e, 0x000f, 0x0010, 0x0011, 0x0012, 0x0013, 0x0014, 0x0015, 0x0016, 0x0017,
        0x0018, 0x0019, 0x001a, 0x001b, 0x001c, 0x001d, 0x001e, 0x001f, 0x002f, 0x0028, 0x0029, 0x002a,
        0x002b, 0x002c, 0x002d, 0x002e, 0x0037, 0x0030, 0x0031, 0x0032, 0x0033, 0x0034, 0x0035, 0x0036,
        0x003f, 0x0038, 0x0039, 0x003a, 0x003b, 0x003c, 0x003d, 0x003e, 0x0027, 0x0020, 0x0021, 0x0022,
        0x0023, 0x0024, 0x0025, 0x0026, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f, 0x0118, 0x0119, 0x011a,
        0x0103, 0x0104, 0x0105, 0x0106, 0x0107, 0x0100, 0x0101, 0x0102, 0x010b, 0x010c, 0x010d, 0x010e,
        0x010f, 0x0108, 0x0109, 0x010a, 0x0113, 0x0114, 0x0115, 0x0116, 0x0117, 0x0110, 0x0111, 0x0112,
        0x0130, 0x0131, 0x0132, 0x0133, 0x0134, 0x0135, 0x0136, 0x0137, 0x0138, 0x0139, 0x013a, 0x013b,
        0x013c, 0x013d, 0x013e, 0x013f, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0127,
        0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x012f, 0x0205, 0x0206, 0x0207, 0x0200,
        0x0201, 0x0202, 0x0203, 0x0204, 0x020d, 0x020e, 0x020f, 0x0208, 0x0209, 0x020a, 0x020b, 0x020c,
        0x0215, 0x0216, 0x0217, 0x0210, 0x0211, 0x0212, 0x0213, 0x0214, 0x021d, 0x021e, 0x021f, 0x0218,
        0x0219, 0x021a, 0x021b, 0x021c, 0x022c, 0x022d, 0x022e, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b,
        0x0234, 0x0235, 0x0236, 0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x023c, 0x023d, 0x023e, 0x023f,
        0x0238, 0x0239, 0x023a, 0x023b, 0x0224, 0x0225, 0x0226, 0x0227, 0x0220, 0x0221, 0x0222, 0x0223,
    ],
    [
        0x0308, 0x0309, 0x030a, 0x030b, 0x030c, 0x030d, 0x030e, 0x030f, 0x0310, 0x0311, 0x0312, 0x0313,
        0x0314, 0x0315, 0x0316, 0x0317, 0x0318, 0x0319, 0x031a, 0x031b, 0x031c, 0x031d, 0x031e, 0x031f,
        0x0300, 0x0301, 0x0302, 0x0303, 0x0304, 0x0305, 0x0306, 0x0307, 0x0321, 0x0322, 0x0323, 0x0324,
        0x0325, 0x0326, 0x0327, 0x0320, 0x0329, 0x032a, 0x032b, 0x032c, 0x032d, 0x032e, 0x032f, 0x0328,
        0x0331, 0x0332, 0x0333, 0x0334, 0x0335, 0x0336, 0x0337, 0x0330, 0x0339, 0x033a, 0x033b, 0x033c,
        0x033d, 0x033e, 0x033f, 0x0338, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f, 0x0118, 0x0119, 0x011a,
        0x0103, 0x0104, 0x0105, 0x0106, 0x0107, 0x0100, 0x0101, 0x0102, 0x010b, 0x010c, 0x010d, 0x010e,
        0x010f, 0x0108, 0x0109, 0x010a, 0x0113, 0x0114, 0x0115, 0x0116, 0x0117, 0x0110, 0x0111, 0x0112,
        0x0130, 0x0131, 0x0132, 0x0133, 0x0134, 0x0135, 0x0136, 0x0137, 0x0138, 0x0139, 0x013a, 0x013b,
        0x013c, 0x013d, 0x013e, 0x013f, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0127,
        0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x012f, 0x0205, 0x0206, 0x0207, 0x0200,
        0x0201, 0x0202, 0x0203, 0x0204, 0x020d, 0x020e, 0x020f, 0x0208, 0x0209, 0x020a, 0x020b, 0x020c,
        0x0215, 0x0216, 0x0217, 0x0210, 0x0211, 0x0212, 0x0213, 0x0214, 0x021d, 0x021e, 0x021f, 0x0218,
        0x0219, 0x021a, 0x021b, 0x021c, 0x022c, 0x022d, 0x022e, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b,
        0x0234, 0x0235, 0x0236, 0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x023c, 0x023d, 0x023e, 0x023f,
        0x0238, 0x0239, 0x023a, 0x023b, 0x0224, 0x0225, 0x0226, 0x0227, 0x0220, 0x0221, 0x0222, 0x0223,
    ],
    [
        0x0355, 0x0356, 0x0357, 0x0350, 0x0351, 0x0352, 0x0353, 0x0354, 0x035d, 0x035e, 0x035f, 0x0358,
        0x0359, 0x035a, 0x035b, 0x035c, 0x0345, 0x0346, 0x0347, 0x0340, 0x0341, 0x0342, 0x0343, 0x0344,
        0x034d, 0x034e, 0x034f, 0x0348, 0x0349, 0x034a, 0x034b, 0x034c, 0x0378, 0x0379, 0x037a, 0x037b,
        0x037c, 0x037d, 0x037e, 0x037f, 0x0360, 0x0361, 0x0362, 0x0363, 0x0364, 0x0365, 0x0366, 0x0367,
        0x0368, 0x0369, 0x036a, 0x036b, 0x036c, 0x036d, 0x036e, 0x036f, 0x0370, 0x0371, 0x0372, 0x0373,
        0x0374, 0x0375, 0x0376, 0x0377, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f, 0x0118, 0x0119, 0x011a,
        0x0103, 0x0104, 0x0105, 0x0106, 0x0107, 0x0100, 0x0101, 0x0102, 0x010b, 0x010c, 0x010d, 0x010e,
        0x010f, 0x0108, 0x0109, 0x010a, 0x0113, 0x0114, 0x0115, 0x0116, 0x0117, 0x0110, 0x0111, 0x0112,
        0x0130, 0x0131, 0x0132, 0x0133, 0x0134, 0x0135, 0x0136, 0x0137, 0x0138, 0x0139, 0x013a, 0x013b,
        0x013c, 0x013d, 0x013e, 0x013f, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0127,
        0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x012f, 0x0205, 0x0206, 0x0207, 0x0200,
        0x0201, 0x0202, 0x0203, 0x0204, 0x020d, 0x020e, 0x020f, 0x0208, 0x0209, 0x020a, 0x020b, 0x020c,
        0x0215, 0x0216, 0x0217, 0x0210, 0x0211, 0x0212, 0x0213, 0x0214, 0x021d, 0x021e, 0x021f, 0x0218,
        0x0219, 0x021a, 0x021b, 0x021c, 0x022c, 0x022d, 0x022e, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b,
        0x0234, 0x0235, 0x0236, 0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x023c, 0x023d, 0x023e, 0x023f,
        0x0238, 0x0239, 0x023a, 0x023b, 0x0224, 0x0225, 0x0226, 0x0227, 0x0220, 0x0221, 0x0222, 0x0223,
    ],
    [
        0x038b, 0x038c, 0x038d, 0x038e, 0x038f, 0x0388, 0x0389, 0x038a, 0x0393, 0x0394, 0x0395, 0x0396,
        0x0397, 0x0390, 0x0391, 0x0392, 0x039b, 0x039c, 0x039d, 0x039e, 0x039f, 0x0398, 0x0399, 0x039a,
        0x0383, 0x0384, 0x0385, 0x0386, 0x0387, 0x0380, 0x0381, 0x0382, 0x03a4, 0x03a5, 0x03a6, 0x03a7,
        0x03a0, 0x03a1, 0x03a2, 0x03a3, 0x03ac, 0x03ad, 0x03ae, 0x03af, 0x03a8, 0x03a9, 0x03aa, 0x03ab,
        0x03b4, 0x03b5, 0x03b6, 0x03b7, 0x03b0, 0x03b1, 0x03b2, 0x03b3, 0x03bc, 0x03bd, 0x03be, 0x03bf,
        0x03b8, 0x03b9, 0x03ba, 0x03bb, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f, 0x0118, 0x0119, 0x011a,
        0x0103, 0x0104, 0x0105, 0x0106, 0x0107, 0x0100, 0x0101, 0x0102, 0x010b, 0x010c, 0x010d, 0x010e,
        0x010f, 0x0108, 0x0109, 0x010a, 0x0113, 0x0114, 0x0115, 0x0116, 0x0117, 0x0110, 0x0111, 0x0112,
        0x0130, 0x0131, 0x0132, 0x0133, 0x0134, 0x0135, 0x0136, 0x0137, 0x0138, 0x0139, 0x013a, 0x013b,
        0x013c, 0x013d, 0x013e, 0x013f, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0127,
        0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x012f, 0x0205, 0x0206, 0x0207, 0x0200,
        0x0201, 0x0202, 0x0203, 0x0204, 0x020d, 0x020e, 0x020f, 0x0208, 0x0209, 0x020a, 0x020b, 0x020c,
        0x0215, 0x0216, 0x0217, 0x0210, 0x0211, 0x0212, 0x0213, 0x0214, 0x021d, 0x021e, 0x021f, 0x0218,
        0x0219, 0x021a, 0x021b, 0x021c, 0x022c, 0x022d, 0x022e, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b,
        0x0234, 0x0235, 0x0236, 0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x023c, 0x023d, 0x023e, 0x023f,
        0x0238, 0x0239, 0x023a, 0x023b, 0x0224, 0x0225, 0x0226, 0x0227, 0x0220, 0x0221, 0x0222, 0x0223,
    ],
];

pub(crate) static ET_T_PUSH: [[u16; 192]; 4] = [
    [
        0x0000, 0x0001, 0x0002, 0x0003, 0x0004, 0x0005, 0x0006, 0x0007, 0x0008, 0x0009, 0x000a, 0x000b,
        0x000c, 0x000d, 0x000e, 0x000f, 0x0010, 0x0011, 0x0012, 0x0013, 0x0014, 0x0015, 0x0016, 0x0017,
        0x0018, 0x0019, 0x001a, 0x001b, 0x001c, 0x001d, 0x001e, 0x001f, 0x002f, 0x0028, 0x0029, 0x002a,
        0x002b, 0x002c, 0x002d, 0x002e, 0x0037, 0x0030, 0x0031, 0x0032, 0x0033, 0x0034, 0x0035, 0x0036,
        0x003f, 0x0038, 0x0039, 0x003a, 0x003b, 0x003c, 0x003d, 0x003e, 0x0027, 0x0020, 0x0021, 0x0022,
        0x0023, 0x0024, 0x0025, 0x0026, 0x0100, 0x0101, 0x0102, 0x0103, 0x0104, 0x0105, 0x0106, 0x0107,
        0x0108, 0x0109, 0x010a, 0x010b, 0x010c, 0x010d, 0x010e, 0x010f, 0x0110, 0x0111, 0x0112, 0x0113,
        0x0114, 0x0115, 0x0116, 0x0117, 0x0118, 0x0119, 0x011a, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f,
        0x012f, 0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x0137, 0x0130, 0x0131, 0x0132,
        0x0133, 0x0134, 0x0135, 0x0136, 0x013f, 0x0138, 0x0139, 0x013a, 0x013b, 0x013c, 0x013d, 0x013e,
        0x0127, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0200, 0x0201, 0x0202, 0x0203,
        0x0204, 0x0205, 0x0206, 0x0207, 0x0208, 0x0209, 0x020a, 0x020b, 0x020c, 0x020d, 0x020e, 0x020f,
        0x0210, 0x0211, 0x0212, 0x0213, 0x0214, 0x0215, 0x0216, 0x0217, 0x0218, 0x0219, 0x021a, 0x021b,
        0x021c, 0x021d, 0x021e, 0x021f, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b, 0x022c, 0x022d, 0x022e,
        0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x0234, 0x0235, 0x0236, 0x023f, 0x0238, 0x0239, 0x023a,
        0x023b, 0x023c, 0x023d, 0x023e, 0x0227, 0x0220, 0x0221, 0x0222, 0x0223, 0x0224, 0x0225, 0x0226,
    ],
    [
        0x0308, 0x0309, 0x030a, 0x030b, 0x030c, 0x030d, 0x030e, 0x030f, 0x0310, 0x0311, 0x0312, 0x0313,
        0x0314, 0x0315, 0x0316, 0x0317, 0x0318, 0x0319, 0x031a, 0x031b, 0x031c, 0x031d, 0x031e, 0x031f,
        0x0300, 0x0301, 0x0302, 0x0303, 0x0304, 0x0305, 0x0306, 0x0307, 0x0321, 0x0322, 0x0323, 0x0324,
        0x0325, 0x0326, 0x0327, 0x0320, 0x0329, 0x032a, 0x032b, 0x032c, 0x032d, 0x032e, 0x032f, 0x0328,
        0x0331, 0x0332, 0x0333, 0x0334, 0x0335, 0x0336, 0x0337, 0x0330, 0x0339, 0x033a, 0x033b, 0x033c,
        0x033d, 0x033e, 0x033f, 0x0338, 0x0100, 0x0101, 0x0102, 0x0103, 0x0104, 0x0105, 0x0106, 0x0107,
        0x0108, 0x0109, 0x010a, 0x010b, 0x010c, 0x010d, 0x010e, 0x010f, 0x0110, 0x0111, 0x0112, 0x0113,
        0x0114, 0x0115, 0x0116, 0x0117, 0x0118, 0x0119, 0x011a, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f,
        0x012f, 0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x0137, 0x0130, 0x0131, 0x0132,
        0x0133, 0x0134, 0x0135, 0x0136, 0x013f, 0x0138, 0x0139, 0x013a, 0x013b, 0x013c, 0x013d, 0x013e,
        0x0127, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0200, 0x0201, 0x0202, 0x0203,
        0x0204, 0x0205, 0x0206, 0x0207, 0x0208, 0x0209, 0x020a, 0x020b, 0x020c, 0x020d, 0x020e, 0x020f,
        0x0210, 0x0211, 0x0212, 0x0213, 0x0214, 0x0215, 0x0216, 0x0217, 0x0218, 0x0219, 0x021a, 0x021b,
        0x021c, 0x021d, 0x021e, 0x021f, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b, 0x022c, 0x022d, 0x022e,
        0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x0234, 0x0235, 0x0236, 0x023f, 0x0238, 0x0239, 0x023a,
        0x023b, 0x023c, 0x023d, 0x023e, 0x0227, 0x0220, 0x0221, 0x0222, 0x0223, 0x0224, 0x0225, 0x0226,
    ],
    [
        0x0348, 0x0349, 0x034a, 0x034b, 0x034c, 0x034d, 0x034e, 0x034f, 0x0350, 0x0351, 0x0352, 0x0353,
        0x0354, 0x0355, 0x0356, 0x0357, 0x0358, 0x0359, 0x035a, 0x035b, 0x035c, 0x035d, 0x035e, 0x035f,
        0x0340, 0x0341, 0x0342, 0x0343, 0x0344, 0x0345, 0x0346, 0x0347, 0x0361, 0x0362, 0x0363, 0x0364,
        0x0365, 0x0366, 0x0367, 0x0360, 0x0369, 0x036a, 0x036b, 0x036c, 0x036d, 0x036e, 0x036f, 0x0368,
        0x0371, 0x0372, 0x0373, 0x0374, 0x0375, 0x0376, 0x0377, 0x0370, 0x0379, 0x037a, 0x037b, 0x037c,
        0x037d, 0x037e, 0x037f, 0x0378, 0x0100, 0x0101, 0x0102, 0x0103, 0x0104, 0x0105, 0x0106, 0x0107,
        0x0108, 0x0109, 0x010a, 0x010b, 0x010c, 0x010d, 0x010e, 0x010f, 0x0110, 0x0111, 0x0112, 0x0113,
        0x0114, 0x0115, 0x0116, 0x0117, 0x0118, 0x0119, 0x011a, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f,
        0x012f, 0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x0137, 0x0130, 0x0131, 0x0132,
        0x0133, 0x0134, 0x0135, 0x0136, 0x013f, 0x0138, 0x0139, 0x013a, 0x013b, 0x013c, 0x013d, 0x013e,
        0x0127, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0200, 0x0201, 0x0202, 0x0203,
        0x0204, 0x0205, 0x0206, 0x0207, 0x0208, 0x0209, 0x020a, 0x020b, 0x020c, 0x020d, 0x020e, 0x020f,
        0x0210, 0x0211, 0x0212, 0x0213, 0x0214, 0x0215, 0x0216, 0x0217, 0x0218, 0x0219, 0x021a, 0x021b,
        0x021c, 0x021d, 0x021e, 0x021f, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b, 0x022c, 0x022d, 0x022e,
        0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x0234, 0x0235, 0x0236, 0x023f, 0x0238, 0x0239, 0x023a,
        0x023b, 0x023c, 0x023d, 0x023e, 0x0227, 0x0220, 0x0221, 0x0222, 0x0223, 0x0224, 0x0225, 0x0226,
    ],
    [
        0x0388, 0x0389, 0x038a, 0x038b, 0x038c, 0x038d, 0x038e, 0x038f, 0x0390, 0x0391, 0x0392, 0x0393,
        0x0394, 0x0395, 0x0396, 0x0397, 0x0398, 0x0399, 0x039a, 0x039b, 0x039c, 0x039d, 0x039e, 0x039f,
        0x0380, 0x0381, 0x0382, 0x0383, 0x0384, 0x0385, 0x0386, 0x0387, 0x03a1, 0x03a2, 0x03a3, 0x03a4,
        0x03a5, 0x03a6, 0x03a7, 0x03a0, 0x03a9, 0x03aa, 0x03ab, 0x03ac, 0x03ad, 0x03ae, 0x03af, 0x03a8,
        0x03b1, 0x03b2, 0x03b3, 0x03b4, 0x03b5, 0x03b6, 0x03b7, 0x03b0, 0x03b9, 0x03ba, 0x03bb, 0x03bc,
        0x03bd, 0x03be, 0x03bf, 0x03b8, 0x0100, 0x0101, 0x0102, 0x0103, 0x0104, 0x0105, 0x0106, 0x0107,
        0x0108, 0x0109, 0x010a, 0x010b, 0x010c, 0x010d, 0x010e, 0x010f, 0x0110, 0x0111, 0x0112, 0x0113,
        0x0114, 0x0115, 0x0116, 0x0117, 0x0118, 0x0119, 0x011a, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f,
        0x012f, 0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x0137, 0x0130, 0x0131, 0x0132,
        0x0133, 0x0134, 0x0135, 0x0136, 0x013f, 0x0138, 0x0139, 0x013a, 0x013b, 0x013c, 0x013d, 0x013e,
        0x0127, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0200, 0x0201, 0x0202, 0x0203,
        0x0204, 0x0205, 0x0206, 0x0207, 0x0208, 0x0209, 0x020a, 0x020b, 0x020c, 0x020d, 0x020e, 0x020f,
        0x0210, 0x0211, 0x0212, 0x0213, 0x0214, 0x0215, 0x0216, 0x0217, 0x0218, 0x0219, 0x021a, 0x021b,
        0x021c, 0x021d, 0x021e, 0x021f, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b, 0x022c, 0x022d, 0x022e,
        0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x0234, 0x0235, 0x0236, 0x023f, 0x0238, 0x0239, 0x023a,
        0x023b, 0x023c, 0x023d, 0x023e, 0x0227, 0x0220, 0x0221, 0x0222, 0x0223, 0x0224, 0x0225, 0x0226,
    ],
];

pub(crate) static BS_T_PUSH: [[u16; 192]; 4] = [
    [
        0x0000, 0x0001, 0x0002, 0x0003, 0x0004, 0x0005, 0x0006, 0x0007, 0x0008, 0x0009, 0x000a, 0x000b,
        0x000c, 0x000d, 0x000e, 0x000f, 0x0010, 0x0011, 0x0012, 0x0013, 0x0014, 0x0015, 0x0016, 0x0017,
        0x0018, 0x0019, 0x001a, 0x001b, 0x001c, 0x001d, 0x001e, 0x001f, 0x002f, 0x0028, 0x0029, 0x002a,
        0x002b, 0x002c, 0x002d, 0x002e, 0x0037, 0x0030, 0x0031, 0x0032, 0x0033, 0x0034, 0x0035, 0x0036,
        0x003f, 0x0038, 0x0039, 0x003a, 0x003b, 0x003c, 0x003d, 0x003e, 0x0027, 0x0020, 0x0021, 0x0022,
        0x0023, 0x0024, 0x0025, 0x0026, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f, 0x0118, 0x0119, 0x011a,
        0x0103, 0x0104, 0x0105, 0x0106, 0x0107, 0x0100, 0x0101, 0x0102, 0x010b, 0x010c, 0x010d, 0x010e,
        0x010f, 0x0108, 0x0109, 0x010a, 0x0113, 0x0114, 0x0115, 0x0116, 0x0117, 0x0110, 0x0111, 0x0112,
        0x0130, 0x0131, 0x0132, 0x0133, 0x0134, 0x0135, 0x0136, 0x0137, 0x0138, 0x0139, 0x013a, 0x013b,
        0x013c, 0x013d, 0x013e, 0x013f, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0127,
        0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x012f, 0x0225, 0x0226, 0x0227, 0x0220,
        0x0221, 0x0222, 0x0223, 0x0224, 0x022d, 0x022e, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b, 0x022c,
        0x0235, 0x0236, 0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x0234, 0x023d, 0x023e, 0x023f, 0x0238,
        0x0239, 0x023a, 0x023b, 0x023c, 0x020c, 0x020d, 0x020e, 0x020f, 0x0208, 0x0209, 0x020a, 0x020b,
        0x0214, 0x0215, 0x0216, 0x0217, 0x0210, 0x0211, 0x0212, 0x0213, 0x021c, 0x021d, 0x021e, 0x021f,
        0x0218, 0x0219, 0x021a, 0x021b, 0x0204, 0x0205, 0x0206, 0x0207, 0x0200, 0x0201, 0x0202, 0x0203,
    ],
    [
        0x0308, 0x0309, 0x030a, 0x030b, 0x030c, 0x030d, 0x030e, 0x030f, 0x0310, 0x0311, 0x0312, 0x0313,
        0x0314, 0x0315, 0x0316, 0x0317, 0x0318, 0x0319, 0x031a, 0x031b, 0x031c, 0x031d, 0x031e, 0x031f,
        0x0300, 0x0301, 0x0302, 0x0303, 0x0304, 0x0305, 0x0306, 0x0307, 0x0321, 0x0322, 0x0323, 0x0324,
        0x0325, 0x0326, 0x0327, 0x0320, 0x0329, 0x032a, 0x032b, 0x032c, 0x032d, 0x032e, 0x032f, 0x0328,
        0x0331, 0x0332, 0x0333, 0x0334, 0x0335, 0x0336, 0x0337, 0x0330, 0x0339, 0x033a, 0x033b, 0x033c,
        0x033d, 0x033e, 0x033f, 0x0338, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f, 0x0118, 0x0119, 0x011a,
        0x0103, 0x0104, 0x0105, 0x0106, 0x0107, 0x0100, 0x0101, 0x0102, 0x010b, 0x010c, 0x010d, 0x010e,
        0x010f, 0x0108, 0x0109, 0x010a, 0x0113, 0x0114, 0x0115, 0x0116, 0x0117, 0x0110, 0x0111, 0x0112,
        0x0130, 0x0131, 0x0132, 0x0133, 0x0134, 0x0135, 0x0136, 0x0137, 0x0138, 0x0139, 0x013a, 0x013b,
        0x013c, 0x013d, 0x013e, 0x013f, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0127,
        0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x012f, 0x0225, 0x0226, 0x0227, 0x0220,
        0x0221, 0x0222, 0x0223, 0x0224, 0x022d, 0x022e, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b, 0x022c,
        0x0235, 0x0236, 0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x0234, 0x023d, 0x023e, 0x023f, 0x0238,
        0x0239, 0x023a, 0x023b, 0x023c, 0x020c, 0x020d, 0x020e, 0x020f, 0x0208, 0x0209, 0x020a, 0x020b,
        0x0214, 0x0215, 0x0216, 0x0217, 0x0210, 0x0211, 0x0212, 0x0213, 0x021c, 0x021d, 0x021e, 0x021f,
        0x0218, 0x0219, 0x021a, 0x021b, 0x0204, 0x0205, 0x0206, 0x0207, 0x0200, 0x0201, 0x0202, 0x0203,
    ],
    [
        0x0355, 0x0356, 0x0357, 0x0350, 0x0351, 0x0352, 0x0353, 0x0354, 0x035d, 0x035e, 0x035f, 0x0358,
        0x0359, 0x035a, 0x035b, 0x035c, 0x0345, 0x0346, 0x0347, 0x0340, 0x0341, 0x0342, 0x0343, 0x0344,
        0x034d, 0x034e, 0x034f, 0x0348, 0x0349, 0x034a, 0x034b, 0x034c, 0x0378, 0x0379, 0x037a, 0x037b,
        0x037c, 0x037d, 0x037e, 0x037f, 0x0360, 0x0361, 0x0362, 0x0363, 0x0364, 0x0365, 0x0366, 0x0367,
        0x0368, 0x0369, 0x036a, 0x036b, 0x036c, 0x036d, 0x036e, 0x036f, 0x0370, 0x0371, 0x0372, 0x0373,
        0x0374, 0x0375, 0x0376, 0x0377, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f, 0x0118, 0x0119, 0x011a,
        0x0103, 0x0104, 0x0105, 0x0106, 0x0107, 0x0100, 0x0101, 0x0102, 0x010b, 0x010c, 0x010d, 0x010e,
        0x010f, 0x0108, 0x0109, 0x010a, 0x0113, 0x0114, 0x0115, 0x0116, 0x0117, 0x0110, 0x0111, 0x0112,
        0x0130, 0x0131, 0x0132, 0x0133, 0x0134, 0x0135, 0x0136, 0x0137, 0x0138, 0x0139, 0x013a, 0x013b,
        0x013c, 0x013d, 0x013e, 0x013f, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0127,
        0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x012f, 0x0225, 0x0226, 0x0227, 0x0220,
        0x0221, 0x0222, 0x0223, 0x0224, 0x022d, 0x022e, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b, 0x022c,
        0x0235, 0x0236, 0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x0234, 0x023d, 0x023e, 0x023f, 0x0238,
        0x0239, 0x023a, 0x023b, 0x023c, 0x020c, 0x020d, 0x020e, 0x020f, 0x0208, 0x0209, 0x020a, 0x020b,
        0x0214, 0x0215, 0x0216, 0x0217, 0x0210, 0x0211, 0x0212, 0x0213, 0x021c, 0x021d, 0x021e, 0x021f,
        0x0218, 0x0219, 0x021a, 0x021b, 0x0204, 0x0205, 0x0206, 0x0207, 0x0200, 0x0201, 0x0202, 0x0203,
    ],
    [
        0x03a4, 0x03a5, 0x03a6, 0x03a7, 0x03a0, 0x03a1, 0x03a2, 0x03a3, 0x03ac, 0x03ad, 0x03ae, 0x03af,
        0x03a8, 0x03a9, 0x03aa, 0x03ab, 0x03b4, 0x03b5, 0x03b6, 0x03b7, 0x03b0, 0x03b1, 0x03b2, 0x03b3,
        0x03bc, 0x03bd, 0x03be, 0x03bf, 0x03b8, 0x03b9, 0x03ba, 0x03bb, 0x038b, 0x038c, 0x038d, 0x038e,
        0x038f, 0x0388, 0x0389, 0x038a, 0x0393, 0x0394, 0x0395, 0x0396, 0x0397, 0x0390, 0x0391, 0x0392,
        0x039b, 0x039c, 0x039d, 0x039e, 0x039f, 0x0398, 0x0399, 0x039a, 0x0383, 0x0384, 0x0385, 0x0386,
        0x0387, 0x0380, 0x0381, 0x0382, 0x011b, 0x011c, 0x011d, 0x011e, 0x011f, 0x0118, 0x0119, 0x011a,
        0x0103, 0x0104, 0x0105, 0x0106, 0x0107, 0x0100, 0x0101, 0x0102, 0x010b, 0x010c, 0x010d, 0x010e,
        0x010f, 0x0108, 0x0109, 0x010a, 0x0113, 0x0114, 0x0115, 0x0116, 0x0117, 0x0110, 0x0111, 0x0112,
        0x0130, 0x0131, 0x0132, 0x0133, 0x0134, 0x0135, 0x0136, 0x0137, 0x0138, 0x0139, 0x013a, 0x013b,
        0x013c, 0x013d, 0x013e, 0x013f, 0x0120, 0x0121, 0x0122, 0x0123, 0x0124, 0x0125, 0x0126, 0x0127,
        0x0128, 0x0129, 0x012a, 0x012b, 0x012c, 0x012d, 0x012e, 0x012f, 0x0225, 0x0226, 0x0227, 0x0220,
        0x0221, 0x0222, 0x0223, 0x0224, 0x022d, 0x022e, 0x022f, 0x0228, 0x0229, 0x022a, 0x022b, 0x022c,
        0x0235, 0x0236, 0x0237, 0x0230, 0x0231, 0x0232, 0x0233, 0x0234, 0x023d, 0x023e, 0x023f, 0x0238,
        0x0239, 0x023a, 0x023b, 0x023c, 0x020c, 0x020d, 0x020e, 0x020f, 0x0208, 0x0209, 0x020a, 0x020b,
        0x0214, 0x0215, 0x0216, 0x0217, 0x0210, 0x0211, 0x0212, 0x0213, 0x021c, 0x021d, 0x021e, 0x021f,
        0x0218, 0x0219, 0x021a, 0x021b, 0x0204, 0x0205, 0x0206, 0x0207, 0x0200, 0x0201, 0x0202, 0x0203,
    ],
];
