// @generated by scripts/gen_tables.py; do not edit by hand.

// Inclusive code point ranges, sorted and non-overlapping.

pub(crate) static ALNUM: &[(u32, u32)] = &[
    (0x0030, 0x0039),
    (0x0041, 0x005A),
    (0x0061, 0x007A),
    (0x00AA, 0x00AA),
    (0x00B5, 0x00B5),
    (0x00BA, 0x00BA),
    (0x00C0, 0x00D6),
    (0x00D8, 0x00F6),
    (0x00F8, 0x02C1),
    (0x02C6, 0x02D1),
    (0x02E0, 0x02E4),
    (0x02EC, 0x02EC),
    (0x02EE, 0x02EE),
    (0x0345, 0x0345),
    (0x0370, 0x0374),
    (0x0376, 0x0377),
    (0x037A, 0x037D),
    (0x037F, 0x037F),
    (0x0386, 0x0386),
    (0x0388, 0x038A),
    (0x038C, 0x038C),
    (0x038E, 0x03A1),
    (0x03A3, 0x03F5),
    (0x03F7, 0x0481),
    (0x048A, 0x052F),
    (0x0531, 0x0556),
    (0x0559, 0x0559),
    (0x0561, 0x0587),
    (0x05B0, 0x05BD),
    (0x05BF, 0x05BF),
    (0x05C1, 0x05C2),
    (0x05C4, 0x05C5),
    (0x05C7, 0x05C7),
    (0x05D0, 0x05EA),
    (0x05F0, 0x05F2),
    (0x0610, 0x061A),
    (0x0620, 0x0657),
    (0x0659, 0x0669),
    (0x066E, 0x06D3),
    (0x06D5, 0x06DC),
    (0x06E1, 0x06E8),
    (0x06ED, 0x06FC),
    (0x06FF, 0x06FF),
    (0x0710, 0x073F),
    (0x074D, 0x07B1),
    (0x07C0, 0x07EA),
    (0x07F4, 0x07F5),
    (0x07FA, 0x07FA),
    (0x0800, 0x0817),
    (0x081A, 0x082C),
    (0x0840, 0x0858),
    (0x08A0, 0x08B2),
    (0x08E4, 0x08E9),
    (0x08F0, 0x0950),
    (0x0955, 0x0963),
    (0x0966, 0x096F),
    (0x0971, 0x0983),
    (0x0985, 0x098C),
    (0x098F, 0x0990),
    (0x0993, 0x09A8),
    (0x09AA, 0x09B0),
    (0x09B2, 0x09B2),
    (0x09B6, 0x09B9),
    (0x09BC, 0x09C4),
    (0x09C7, 0x09C8),
    (0x09CB, 0x09CE),
    (0x09D7, 0x09D7),
    (0x09DC, 0x09DD),
    (0x09DF, 0x09E3),
    (0x09E6, 0x09F1),
    (0x0A01, 0x0A03),
    (0x0A05, 0x0A0A),
    (0x0A0F, 0x0A10),
    (0x0A13, 0x0A28),
    (0x0A2A, 0x0A30),
    (0x0A32, 0x0A33),
    (0x0A35, 0x0A36),
    (0x0A38, 0x0A39),
    (0x0A3C, 0x0A3C),
    (0x0A3E, 0x0A42),
    (0x0A47, 0x0A48),
    (0x0A4B, 0x0A4D),
    (0x0A51, 0x0A51),
    (0x0A59, 0x0A5C),
    (0x0A5E, 0x0A5E),
    (0x0A66, 0x0A75),
    (0x0A81, 0x0A83),
    (0x0A85, 0x0A8D),
    (0x0A8F, 0x0A91),
    (0x0A93, 0x0AA8),
    (0x0AAA, 0x0AB0),
    (0x0AB2, 0x0AB3),
    (0x0AB5, 0x0AB9),
    (0x0ABC, 0x0AC5),
    (0x0AC7, 0x0AC9),
    (0x0ACB, 0x0ACD),
    (0x0AD0, 0x0AD0),
    (0x0AE0, 0x0AE3),
    (0x0AE6, 0x0AEF),
    (0x0AFD, 0x0AFF),
    (0x0B01, 0x0B03),
    (0x0B05, 0x0B0C),
    (0x0B0F, 0x0B10),
    (0x0B13, 0x0B28),
    (0x0B2A, 0x0B30),
    (0x0B32, 0x0B33),
    (0x0B35, 0x0B39),
    (0x0B3C, 0x0B44),
    (0x0B47, 0x0B48),
    (0x0B4B, 0x0B4D),
    (0x0B56, 0x0B57),
    (0x0B5C, 0x0B5D),
    (0x0B5F, 0x0B63),
    (0x0B66, 0x0B6F),
    (0x0B71, 0x0B71),
    (0x0B82, 0x0B83),
    (0x0B85, 0x0B8A),
    (0x0B8E, 0x0B90),
    (0x0B92, 0x0B95),
    (0x0B99, 0x0B9A),
    (0x0B9C, 0x0B9C),
    (0x0B9E, 0x0B9F),
    (0x0BA3, 0x0BA4),
    (0x0BA8, 0x0BAA),
    (0x0BAE, 0x0BB9),
    (0x0BBE, 0x0BC2),
    (0x0BC6, 0x0BC8),
    (0x0BCA, 0x0BCD),
    (0x0BD0, 0x0BD0),
    (0x0BD7, 0x0BD7),
    (0x0BE6, 0x0BEF),
    (0x0C00, 0x0C03),
    (0x0C05, 0x0C0C),
    (0x0C0E, 0x0C10),
    (0x0C12, 0x0C28),
    (0x0C2A, 0x0C39),
    (0x0C3D, 0x0C44),
    (0x0C46, 0x0C48),
    (0x0C4A, 0x0C4D),
    (0x0C55, 0x0C56),
    (0x0C58, 0x0C59),
    (0x0C60, 0x0C63),
    (0x0C66, 0x0C6F),
    (0x0C81, 0x0C83),
    (0x0C85, 0x0C8C),
    (0x0C8E, 0x0C90),
    (0x0C92, 0x0CA8),
    (0x0CAA, 0x0CB3),
    (0x0CB5, 0x0CB9),
    (0x0CBC, 0x0CC4),
    (0x0CC6, 0x0CC8),
    (0x0CCA, 0x0CCD),
    (0x0CD5, 0x0CD6),
    (0x0CDE, 0x0CDE),
    (0x0CE0, 0x0CE3),
    (0x0CE6, 0x0CEF),
    (0x0CF1, 0x0CF2),
    (0x0D01, 0x0D03),
    (0x0D05, 0x0D0C),
    (0x0D0E, 0x0D10),
    (0x0D12, 0x0D44),
    (0x0D46, 0x0D48),
    (0x0D4A, 0x0D4E),
    (0x0D57, 0x0D57),
    (0x0D60, 0x0D63),
    (0x0D66, 0x0D6F),
    (0x0D7A, 0x0D7F),
    (0x0D82, 0x0D83),
    (0x0D85, 0x0D96),
    (0x0D9A, 0x0DB1),
    (0x0DB3, 0x0DBB),
    (0x0DBD, 0x0DBD),
    (0x0DC0, 0x0DC6),
    (0x0DCA, 0x0DCA),
    (0x0DCF, 0x0DD4),
    (0x0DD6, 0x0DD6),
    (0x0DD8, 0x0DDF),
    (0x0DE6, 0x0DEF),
    (0x0DF2, 0x0DF3),
    (0x0E01, 0x0E3A),
    (0x0E40, 0x0E46),
    (0x0E4D, 0x0E4D),
    (0x0E50, 0x0E59),
    (0x0E81, 0x0E82),
    (0x0E84, 0x0E84),
    (0x0E87, 0x0E88),
    (0x0E8A, 0x0E8A),
    (0x0E8D, 0x0E8D),
    (0x0E94, 0x0E97),
    (0x0E99, 0x0E9F),
    (0x0EA1, 0x0EA3),
    (0x0EA5, 0x0EA5),
    (0x0EA7, 0x0EA7),
    (0x0EAA, 0x0EAB),
    (0x0EAD, 0x0EBD),
    (0x0EC0, 0x0EC4),
    (0x0EC6, 0x0EC6),
    (0x0ECD, 0x0ECD),
    (0x0ED0, 0x0ED9),
    (0x0EDC, 0x0EDF),
    (0x0F00, 0x0F00),
    (0x0F20, 0x0F29),
    (0x0F40, 0x0F47),
    (0x0F49, 0x0F6C),
    (0x0F71, 0x0F81),
    (0x0F88, 0x0F97),
    (0x0F99, 0x0FBC),
    (0x1000, 0x1036),
    (0x1038, 0x1039),
    (0x103B, 0x1049),
    (0x1050, 0x1062),
    (0x1065, 0x1068),
    (0x106E, 0x1086),
    (0x108E, 0x108E),
    (0x1090, 0x1099),
    (0x109C, 0x109D),
    (0x10A0, 0x10C5),
    (0x10C7, 0x10C7),
    (0x10CD, 0x10CD),
    (0x10D0, 0x10FA),
    (0x10FC, 0x1248),
    (0x124A, 0x124D),
    (0x1250, 0x1256),
    (0x1258, 0x1258),
    (0x125A, 0x125D),
    (0x1260, 0x1288),
    (0x128A, 0x128D),
    (0x1290, 0x12B0),
    (0x12B2, 0x12B5),
    (0x12B8, 0x12BE),
    (0x12C0, 0x12C0),
    (0x12C2, 0x12C5),
    (0x12C8, 0x12D6),
    (0x12D8, 0x1310),
    (0x1312, 0x1315),
    (0x1318, 0x135A),
    (0x135F, 0x135F),
    (0x1380, 0x138F),
    (0x13A0, 0x13F4),
    (0x1401, 0x166C),
    (0x166F, 0x167F),
    (0x1681, 0x169A),
    (0x16A0, 0x16EA),
    (0x16EE, 0x16F8),
    (0x1700, 0x170C),
    (0x170E, 0x1714),
    (0x1720, 0x1733),
    (0x1740, 0x1753),
    (0x1760, 0x176C),
    (0x176E, 0x1770),
    (0x1772, 0x1773),
    (0x1780, 0x17B3),
    (0x17B6, 0x17C8),
    (0x17D7, 0x17D7),
    (0x17DC, 0x17DC),
    (0x17E0, 0x17E9),
    (0x1810, 0x1819),
    (0x1820, 0x1877),
    (0x1880, 0x18AA),
    (0x18B0, 0x18F5),
    (0x1900, 0x191E),
    (0x1920, 0x192B),
    (0x1930, 0x1938),
    (0x1946, 0x196D),
    (0x1970, 0x1974),
    (0x1980, 0x19AB),
    (0x19B0, 0x19C9),
    (0x19D0, 0x19D9),
    (0x1A00, 0x1A1B),
    (0x1A20, 0x1A5E),
    (0x1A61, 0x1A74),
    (0x1A80, 0x1A89),
    (0x1A90, 0x1A99),
    (0x1AA7, 0x1AA7),
    (0x1B00, 0x1B33),
    (0x1B35, 0x1B43),
    (0x1B45, 0x1B4B),
    (0x1B50, 0x1B59),
    (0x1B80, 0x1BA9),
    (0x1BAB, 0x1BE5),
    (0x1BE7, 0x1BF1),
    (0x1C00, 0x1C35),
    (0x1C37, 0x1C37),
    (0x1C40, 0x1C49),
    (0x1C4D, 0x1C7D),
    (0x1CE9, 0x1CEC),
    (0x1CEE, 0x1CF3),
    (0x1CF5, 0x1CF6),
    (0x1D00, 0x1DBF),
    (0x1DE7, 0x1DF4),
    (0x1E00, 0x1F15),
    (0x1F18, 0x1F1D),
    (0x1F20, 0x1F45),
    (0x1F48, 0x1F4D),
    (0x1F50, 0x1F57),
    (0x1F59, 0x1F59),
    (0x1F5B, 0x1F5B),
    (0x1F5D, 0x1F5D),
    (0x1F5F, 0x1F7D),
    (0x1F80, 0x1FB4),
    (0x1FB6, 0x1FBC),
    (0x1FBE, 0x1FBE),
    (0x1FC2, 0x1FC4),
    (0x1FC6, 0x1FCC),
    (0x1FD0, 0x1FD3),
    (0x1FD6, 0x1FDB),
    (0x1FE0, 0x1FEC),
    (0x1FF2, 0x1FF4),
    (0x1FF6, 0x1FFC),
    (0x2071, 0x2071),
    (0x207F, 0x207F),
    (0x2090, 0x209C),
    (0x2102, 0x2102),
    (0x2107, 0x2107),
    (0x210A, 0x2113),
    (0x2115, 0x2115),
    (0x2119, 0x211D),
    (0x2124, 0x2124),
    (0x2126, 0x2126),
    (0x2128, 0x2128),
    (0x212A, 0x212D),
    (0x212F, 0x2139),
    (0x213C, 0x213F),
    (0x2145, 0x2149),
    (0x214E, 0x214E),
    (0x2160, 0x2188),
    (0x24B6, 0x24E9),
    (0x25CC, 0x25CC),
    (0x2C00, 0x2C2E),
    (0x2C30, 0x2C5E),
    (0x2C60, 0x2CE4),
    (0x2CEB, 0x2CEE),
    (0x2CF2, 0x2CF3),
    (0x2D00, 0x2D25),
    (0x2D27, 0x2D27),
    (0x2D2D, 0x2D2D),
    (0x2D30, 0x2D67),
    (0x2D6F, 0x2D6F),
    (0x2D80, 0x2D96),
    (0x2DA0, 0x2DA6),
    (0x2DA8, 0x2DAE),
    (0x2DB0, 0x2DB6),
    (0x2DB8, 0x2DBE),
    (0x2DC0, 0x2DC6),
    (0x2DC8, 0x2DCE),
    (0x2DD0, 0x2DD6),
    (0x2DD8, 0x2DDE),
    (0x2DE0, 0x2DFF),
    (0x2E2F, 0x2E2F),
    (0x3006, 0x3006),
    (0x3031, 0x3035),
    (0x303C, 0x303C),
    (0x3041, 0x3096),
    (0x309D, 0x309F),
    (0x30A1, 0x30FA),
    (0x30FC, 0x30FF),
    (0x3105, 0x312D),
    (0x3131, 0x318E),
    (0x31A0, 0x31BA),
    (0x31F0, 0x31FF),
    (0xA000, 0xA48C),
    (0xA4D0, 0xA4FD),
    (0xA500, 0xA60C),
    (0xA610, 0xA62B),
    (0xA640, 0xA66E),
    (0xA674, 0xA67B),
    (0xA67F, 0xA69D),
    (0xA69F, 0xA6EF),
    (0xA717, 0xA71F),
    (0xA722, 0xA788),
    (0xA78B, 0xA78E),
    (0xA790, 0xA7AD),
    (0xA7B0, 0xA7B1),
    (0xA7F7, 0xA801),
    (0xA803, 0xA805),
    (0xA807, 0xA80A),
    (0xA80C, 0xA827),
    (0xA840, 0xA873),
    (0xA880, 0xA8C4),
    (0xA8D0, 0xA8D9),
    (0xA8F2, 0xA8F7),
    (0xA8FB, 0xA8FB),
    (0xA900, 0xA92A),
    (0xA930, 0xA953),
    (0xA960, 0xA97C),
    (0xA980, 0xA9B2),
    (0xA9B4, 0xA9BF),
    (0xA9CF, 0xA9D9),
    (0xA9E0, 0xA9E4),
    (0xA9E6, 0xA9FE),
    (0xAA00, 0xAA36),
    (0xAA40, 0xAA4D),
    (0xAA50, 0xAA59),
    (0xAA60, 0xAA76),
    (0xAA7A, 0xAA7A),
    (0xAA7E, 0xAABE),
    (0xAAC0, 0xAAC0),
    (0xAAC2, 0xAAC2),
    (0xAADB, 0xAADD),
    (0xAAE0, 0xAAEF),
    (0xAAF2, 0xAAF6),
    (0xAB01, 0xAB06),
    (0xAB09, 0xAB0E),
    (0xAB11, 0xAB16),
    (0xAB20, 0xAB26),
    (0xAB28, 0xAB2E),
    (0xAB30, 0xAB5A),
    (0xAB5C, 0xAB5F),
    (0xAB64, 0xAB65),
    (0xABC0, 0xABEA),
    (0xABF0, 0xABF9),
    (0xD7B0, 0xD7C6),
    (0xD7CB, 0xD7FB),
    (0xFB00, 0xFB06),
    (0xFB13, 0xFB17),
    (0xFB1D, 0xFB28),
    (0xFB2A, 0xFB36),
    (0xFB38, 0xFB3C),
    (0xFB3E, 0xFB3E),
    (0xFB40, 0xFB41),
    (0xFB43, 0xFB44),
    (0xFB46, 0xFBB1),
    (0xFBD3, 0xFD3D),
    (0xFD50, 0xFD8F),
    (0xFD92, 0xFDC7),
    (0xFDF0, 0xFDFB),
    (0xFE70, 0xFE74),
    (0xFE76, 0xFEFC),
    (0xFF10, 0xFF19),
    (0xFF21, 0xFF3A),
    (0xFF41, 0xFF5A),
    (0xFF66, 0xFFBE),
    (0xFFC2, 0xFFC7),
    (0xFFCA, 0xFFCF),
    (0xFFD2, 0xFFD7),
    (0xFFDA, 0xFFDC),
    (0x10A3F, 0x10A3F),
    (0x11046, 0x11046),
    (0x110B9, 0x110BA),
    (0x11133, 0x11133),
    (0x11173, 0x11173),
    (0x111C0, 0x111C0),
    (0x111CA, 0x111CA),
    (0x11235, 0x11236),
    (0x112E9, 0x112EA),
    (0x1133C, 0x1133C),
    (0x1134D, 0x1134D),
    (0x11442, 0x11442),
    (0x11446, 0x11446),
    (0x114C2, 0x114C3),
    (0x115BF, 0x115C0),
    (0x1163F, 0x1163F),
    (0x116B6, 0x116B7),
    (0x11839, 0x1183A),
    (0x119E0, 0x119E0),
    (0x11A34, 0x11A34),
    (0x11C3F, 0x11C3F),
    (0x11D42, 0x11D42),
    (0x11D45, 0x11D45),
    (0x11D97, 0x11D97),
    (0x1E94A, 0x1E94A),
];

pub(crate) static ALPHA: &[(u32, u32)] = &[
    (0x0041, 0x005A),
    (0x0061, 0x007A),
    (0x00AA, 0x00AA),
    (0x00B5, 0x00B5),
    (0x00BA, 0x00BA),
    (0x00C0, 0x00D6),
    (0x00D8, 0x00F6),
    (0x00F8, 0x02C1),
    (0x02C6, 0x02D1),
    (0x02E0, 0x02E4),
    (0x02EC, 0x02EC),
    (0x02EE, 0x02EE),
    (0x0345, 0x0345),
    (0x0370, 0x0374),
    (0x0376, 0x0377),
    (0x037A, 0x037D),
    (0x037F, 0x037F),
    (0x0386, 0x0386),
    (0x0388, 0x038A),
    (0x038C, 0x038C),
    (0x038E, 0x03A1),
    (0x03A3, 0x03F5),
    (0x03F7, 0x0481),
    (0x048A, 0x052F),
    (0x0531, 0x0556),
    (0x0559, 0x0559),
    (0x0561, 0x0587),
    (0x05B0, 0x05BD),
    (0x05BF, 0x05BF),
    (0x05C1, 0x05C2),
    (0x05C4, 0x05C5),
    (0x05C7, 0x05C7),
    (0x05D0, 0x05EA),
    (0x05F0, 0x05F2),
    (0x0610, 0x061A),
    (0x0620, 0x0657),
    (0x0659, 0x065F),
    (0x066E, 0x06D3),
    (0x06D5, 0x06DC),
    (0x06E1, 0x06E8),
    (0x06ED, 0x06EF),
    (0x06FA, 0x06FC),
    (0x06FF, 0x06FF),
    (0x0710, 0x073F),
    (0x074D, 0x07B1),
    (0x07CA, 0x07EA),
    (0x07F4, 0x07F5),
    (0x07FA, 0x07FA),
    (0x0800, 0x0817),
    (0x081A, 0x082C),
    (0x0840, 0x0858),
    (0x08A0, 0x08B2),
    (0x08E4, 0x08E9),
    (0x08F0, 0x0950),
    (0x0955, 0x0963),
    (0x0971, 0x0983),
    (0x0985, 0x098C),
    (0x098F, 0x0990),
    (0x0993, 0x09A8),
    (0x09AA, 0x09B0),
    (0x09B2, 0x09B2),
    (0x09B6, 0x09B9),
    (0x09BC, 0x09C4),
    (0x09C7, 0x09C8),
    (0x09CB, 0x09CE),
    (0x09D7, 0x09D7),
    (0x09DC, 0x09DD),
    (0x09DF, 0x09E3),
    (0x09F0, 0x09F1),
    (0x0A01, 0x0A03),
    (0x0A05, 0x0A0A),
    (0x0A0F, 0x0A10),
    (0x0A13, 0x0A28),
    (0x0A2A, 0x0A30),
    (0x0A32, 0x0A33),
    (0x0A35, 0x0A36),
    (0x0A38, 0x0A39),
    (0x0A3C, 0x0A3C),
    (0x0A3E, 0x0A42),
    (0x0A47, 0x0A48),
    (0x0A4B, 0x0A4D),
    (0x0A51, 0x0A51),
    (0x0A59, 0x0A5C),
    (0x0A5E, 0x0A5E),
    (0x0A70, 0x0A75),
    (0x0A81, 0x0A83),
    (0x0A85, 0x0A8D),
    (0x0A8F, 0x0A91),
    (0x0A93, 0x0AA8),
    (0x0AAA, 0x0AB0),
    (0x0AB2, 0x0AB3),
    (0x0AB5, 0x0AB9),
    (0x0ABC, 0x0AC5),
    (0x0AC7, 0x0AC9),
    (0x0ACB, 0x0ACD),
    (0x0AD0, 0x0AD0),
    (0x0AE0, 0x0AE3),
    (0x0AFD, 0x0AFF),
    (0x0B01, 0x0B03),
    (0x0B05, 0x0B0C),
    (0x0B0F, 0x0B10),
    (0x0B13, 0x0B28),
    (0x0B2A, 0x0B30),
    (0x0B32, 0x0B33),
    (0x0B35, 0x0B39),
    (0x0B3C, 0x0B44),
    (0x0B47, 0x0B48),
    (0x0B4B, 0x0B4D),
    (0x0B56, 0x0B57),
    (0x0B5C, 0x0B5D),
    (0x0B5F, 0x0B63),
    (0x0B71, 0x0B71),
    (0x0B82, 0x0B83),
    (0x0B85, 0x0B8A),
    (0x0B8E, 0x0B90),
    (0x0B92, 0x0B95),
    (0x0B99, 0x0B9A),
    (0x0B9C, 0x0B9C),
    (0x0B9E, 0x0B9F),
    (0x0BA3, 0x0BA4),
    (0x0BA8, 0x0BAA),
    (0x0BAE, 0x0BB9),
    (0x0BBE, 0x0BC2),
    (0x0BC6, 0x0BC8),
    (0x0BCA, 0x0BCD),
    (0x0BD0, 0x0BD0),
    (0x0BD7, 0x0BD7),
    (0x0C00, 0x0C03),
    (0x0C05, 0x0C0C),
    (0x0C0E, 0x0C10),
    (0x0C12, 0x0C28),
    (0x0C2A, 0x0C39),
    (0x0C3D, 0x0C44),
    (0x0C46, 0x0C48),
    (0x0C4A, 0x0C4D),
    (0x0C55, 0x0C56),
    (0x0C58, 0x0C59),
    (0x0C60, 0x0C63),
    (0x0C81, 0x0C83),
    (0x0C85, 0x0C8C),
    (0x0C8E, 0x0C90),
    (0x0C92, 0x0CA8),
    (0x0CAA, 0x0CB3),
    (0x0CB5, 0x0CB9),
    (0x0CBC, 0x0CC4),
    (0x0CC6, 0x0CC8),
    (0x0CCA, 0x0CCD),
    (0x0CD5, 0x0CD6),
    (0x0CDE, 0x0CDE),
    (0x0CE0, 0x0CE3),
    (0x0CF1, 0x0CF2),
    (0x0D01, 0x0D03),
    (0x0D05, 0x0D0C),
    (0x0D0E, 0x0D10),
    (0x0D12, 0x0D44),
    (0x0D46, 0x0D48),
    (0x0D4A, 0x0D4E),
    (0x0D57, 0x0D57),
    (0x0D60, 0x0D63),
    (0x0D7A, 0x0D7F),
    (0x0D82, 0x0D83),
    (0x0D85, 0x0D96),
    (0x0D9A, 0x0DB1),
    (0x0DB3, 0x0DBB),
    (0x0DBD, 0x0DBD),
    (0x0DC0, 0x0DC6),
    (0x0DCA, 0x0DCA),
    (0x0DCF, 0x0DD4),
    (0x0DD6, 0x0DD6),
    (0x0DD8, 0x0DDF),
    (0x0DF2, 0x0DF3),
    (0x0E01, 0x0E3A),
    (0x0E40, 0x0E46),
    (0x0E4D, 0x0E4D),
    (0x0E81, 0x0E82),
    (0x0E84, 0x0E84),
    (0x0E87, 0x0E88),
    (0x0E8A, 0x0E8A),
    (0x0E8D, 0x0E8D),
    (0x0E94, 0x0E97),
    (0x0E99, 0x0E9F),
    (0x0EA1, 0x0EA3),
    (0x0EA5, 0x0EA5),
    (0x0EA7, 0x0EA7),
    (0x0EAA, 0x0EAB),
    (0x0EAD, 0x0EBD),
    (0x0EC0, 0x0EC4),
    (0x0EC6, 0x0EC6),
    (0x0ECD, 0x0ECD),
    (0x0EDC, 0x0EDF),
    (0x0F00, 0x0F00),
    (0x0F40, 0x0F47),
    (0x0F49, 0x0F6C),
    (0x0F71, 0x0F81),
    (0x0F88, 0x0F97),
    (0x0F99, 0x0FBC),
    (0x1000, 0x1036),
    (0x1038, 0x1039),
    (0x103B, 0x103F),
    (0x1050, 0x1062),
    (0x1065, 0x1068),
    (0x106E, 0x1086),
    (0x108E, 0x108E),
    (0x109C, 0x109D),
    (0x10A0, 0x10C5),
    (0x10C7, 0x10C7),
    (0x10CD, 0x10CD),
    (0x10D0, 0x10FA),
    (0x10FC, 0x1248),
    (0x124A, 0x124D),
    (0x1250, 0x1256),
    (0x1258, 0x1258),
    (0x125A, 0x125D),
    (0x1260, 0x1288),
    (0x128A, 0x128D),
    (0x1290, 0x12B0),
    (0x12B2, 0x12B5),
    (0x12B8, 0x12BE),
    (0x12C0, 0x12C0),
    (0x12C2, 0x12C5),
    (0x12C8, 0x12D6),
    (0x12D8, 0x1310),
    (0x1312, 0x1315),
    (0x1318, 0x135A),
    (0x135F, 0x135F),
    (0x1380, 0x138F),
    (0x13A0, 0x13F4),
    (0x1401, 0x166C),
    (0x166F, 0x167F),
    (0x1681, 0x169A),
    (0x16A0, 0x16EA),
    (0x16EE, 0x16F8),
    (0x1700, 0x170C),
    (0x170E, 0x1714),
    (0x1720, 0x1733),
    (0x1740, 0x1753),
    (0x1760, 0x176C),
    (0x176E, 0x1770),
    (0x1772, 0x1773),
    (0x1780, 0x17B3),
    (0x17B6, 0x17C8),
    (0x17D7, 0x17D7),
    (0x17DC, 0x17DC),
    (0x1820, 0x1877),
    (0x1880, 0x18AA),
    (0x18B0, 0x18F5),
    (0x1900, 0x191E),
    (0x1920, 0x192B),
    (0x1930, 0x1938),
    (0x1950, 0x196D),
    (0x1970, 0x1974),
    (0x1980, 0x19AB),
    (0x19B0, 0x19C9),
    (0x1A00, 0x1A1B),
    (0x1A20, 0x1A5E),
    (0x1A61, 0x1A74),
    (0x1AA7, 0x1AA7),
    (0x1B00, 0x1B33),
    (0x1B35, 0x1B43),
    (0x1B45, 0x1B4B),
    (0x1B80, 0x1BA9),
    (0x1BAB, 0x1BAF),
    (0x1BBA, 0x1BE5),
    (0x1BE7, 0x1BF1),
    (0x1C00, 0x1C35),
    (0x1C37, 0x1C37),
    (0x1C4D, 0x1C4F),
    (0x1C5A, 0x1C7D),
    (0x1CE9, 0x1CEC),
    (0x1CEE, 0x1CF3),
    (0x1CF5, 0x1CF6),
    (0x1D00, 0x1DBF),
    (0x1DE7, 0x1DF4),
    (0x1E00, 0x1F15),
    (0x1F18, 0x1F1D),
    (0x1F20, 0x1F45),
    (0x1F48, 0x1F4D),
    (0x1F50, 0x1F57),
    (0x1F59, 0x1F59),
    (0x1F5B, 0x1F5B),
    (0x1F5D, 0x1F5D),
    (0x1F5F, 0x1F7D),
    (0x1F80, 0x1FB4),
    (0x1FB6, 0x1FBC),
    (0x1FBE, 0x1FBE),
    (0x1FC2, 0x1FC4),
    (0x1FC6, 0x1FCC),
    (0x1FD0, 0x1FD3),
    (0x1FD6, 0x1FDB),
    (0x1FE0, 0x1FEC),
    (0x1FF2, 0x1FF4),
    (0x1FF6, 0x1FFC),
    (0x2071, 0x2071),
    (0x207F, 0x207F),
    (0x2090, 0x209C),
    (0x2102, 0x2102),
    (0x2107, 0x2107),
    (0x210A, 0x2113),
    (0x2115, 0x2115),
    (0x2119, 0x211D),
    (0x2124, 0x2124),
    (0x2126, 0x2126),
    (0x2128, 0x2128),
    (0x212A, 0x212D),
    (0x212F, 0x2139),
    (0x213C, 0x213F),
    (0x2145, 0x2149),
    (0x214E, 0x214E),
    (0x2160, 0x2188),
    (0x24B6, 0x24E9),
    (0x25CC, 0x25CC),
    (0x2C00, 0x2C2E),
    (0x2C30, 0x2C5E),
    (0x2C60, 0x2CE4),
    (0x2CEB, 0x2CEE),
    (0x2CF2, 0x2CF3),
    (0x2D00, 0x2D25),
    (0x2D27, 0x2D27),
    (0x2D2D, 0x2D2D),
    (0x2D30, 0x2D67),
    (0x2D6F, 0x2D6F),
    (0x2D80, 0x2D96),
    (0x2DA0, 0x2DA6),
    (0x2DA8, 0x2DAE),
    (0x2DB0, 0x2DB6),
    (0x2DB8, 0x2DBE),
    (0x2DC0, 0x2DC6),
    (0x2DC8, 0x2DCE),
    (0x2DD0, 0x2DD6),
    (0x2DD8, 0x2DDE),
    (0x2DE0, 0x2DFF),
    (0x2E2F, 0x2E2F),
    (0x3006, 0x3006),
    (0x3031, 0x3035),
    (0x303C, 0x303C),
    (0x3041, 0x3096),
    (0x309D, 0x309F),
    (0x30A1, 0x30FA),
    (0x30FC, 0x30FF),
    (0x3105, 0x312D),
    (0x3131, 0x318E),
    (0x31A0, 0x31BA),
    (0x31F0, 0x31FF),
    (0xA000, 0xA48C),
    (0xA4D0, 0xA4FD),
    (0xA500, 0xA60C),
    (0xA610, 0xA61F),
    (0xA62A, 0xA62B),
    (0xA640, 0xA66E),
    (0xA674, 0xA67B),
    (0xA67F, 0xA69D),
    (0xA69F, 0xA6EF),
    (0xA717, 0xA71F),
    (0xA722, 0xA788),
    (0xA78B, 0xA78E),
    (0xA790, 0xA7AD),
    (0xA7B0, 0xA7B1),
    (0xA7F7, 0xA801),
    (0xA803, 0xA805),
    (0xA807, 0xA80A),
    (0xA80C, 0xA827),
    (0xA840, 0xA873),
    (0xA880, 0xA8C4),
    (0xA8F2, 0xA8F7),
    (0xA8FB, 0xA8FB),
    (0xA90A, 0xA92A),
    (0xA930, 0xA953),
    (0xA960, 0xA97C),
    (0xA980, 0xA9B2),
    (0xA9B4, 0xA9BF),
    (0xA9CF, 0xA9CF),
    (0xA9E0, 0xA9E4),
    (0xA9E6, 0xA9EF),
    (0xA9FA, 0xA9FE),
    (0xAA00, 0xAA36),
    (0xAA40, 0xAA4D),
    (0xAA60, 0xAA76),
    (0xAA7A, 0xAA7A),
    (0xAA7E, 0xAABE),
    (0xAAC0, 0xAAC0),
    (0xAAC2, 0xAAC2),
    (0xAADB, 0xAADD),
    (0xAAE0, 0xAAEF),
    (0xAAF2, 0xAAF6),
    (0xAB01, 0xAB06),
    (0xAB09, 0xAB0E),
    (0xAB11, 0xAB16),
    (0xAB20, 0xAB26),
    (0xAB28, 0xAB2E),
    (0xAB30, 0xAB5A),
    (0xAB5C, 0xAB5F),
    (0xAB64, 0xAB65),
    (0xABC0, 0xABEA),
    (0xD7B0, 0xD7C6),
    (0xD7CB, 0xD7FB),
    (0xFB00, 0xFB06),
    (0xFB13, 0xFB17),
    (0xFB1D, 0xFB28),
    (0xFB2A, 0xFB36),
    (0xFB38, 0xFB3C),
    (0xFB3E, 0xFB3E),
    (0xFB40, 0xFB41),
    (0xFB43, 0xFB44),
    (0xFB46, 0xFBB1),
    (0xFBD3, 0xFD3D),
    (0xFD50, 0xFD8F),
    (0xFD92, 0xFDC7),
    (0xFDF0, 0xFDFB),
    (0xFE70, 0xFE74),
    (0xFE76, 0xFEFC),
    (0xFF21, 0xFF3A),
    (0xFF41, 0xFF5A),
    (0xFF66, 0xFFBE),
    (0xFFC2, 0xFFC7),
    (0xFFCA, 0xFFCF),
    (0xFFD2, 0xFFD7),
    (0xFFDA, 0xFFDC),
    (0x10A3F, 0x10A3F),
    (0x11046, 0x11046),
    (0x110B9, 0x110BA),
    (0x11133, 0x11133),
    (0x11173, 0x11173),
    (0x111C0, 0x111C0),
    (0x111CA, 0x111CA),
    (0x11235, 0x11236),
    (0x112E9, 0x112EA),
    (0x1133C, 0x1133C),
    (0x1134D, 0x1134D),
    (0x11442, 0x11442),
    (0x11446, 0x11446),
    (0x114C2, 0x114C3),
    (0x115BF, 0x115C0),
    (0x1163F, 0x1163F),
    (0x116B6, 0x116B7),
    (0x11839, 0x1183A),
    (0x119E0, 0x119E0),
    (0x11A34, 0x11A34),
    (0x11C3F, 0x11C3F),
    (0x11D42, 0x11D42),
    (0x11D45, 0x11D45),
    (0x11D97, 0x11D97),
    (0x1E94A, 0x1E94A),
];

pub(crate) static NUMBER: &[(u32, u32)] = &[
    (0x000A, 0x000A),
    (0x0030, 0x0039),
    (0x00B2, 0x00B3),
    (0x00B9, 0x00B9),
    (0x00BC, 0x00BE),
    (0x0660, 0x0669),
    (0x06F0, 0x06F9),
    (0x07C0, 0x07C9),
    (0x0966, 0x096F),
    (0x09E6, 0x09EF),
    (0x09F4, 0x09F9),
    (0x0A66, 0x0A6F),
    (0x0AE6, 0x0AEF),
    (0x0B66, 0x0B6F),
    (0x0B72, 0x0B77),
    (0x0BE6, 0x0BF2),
    (0x0C66, 0x0C6F),
    (0x0C78, 0x0C7E),
    (0x0CE6, 0x0CEF),
    (0x0D66, 0x0D75),
    (0x0DE6, 0x0DEF),
    (0x0E50, 0x0E59),
    (0x0ED0, 0x0ED9),
    (0x0F20, 0x0F33),
    (0x1040, 0x1049),
    (0x1090, 0x1099),
    (0x1369, 0x137C),
    (0x16EE, 0x16F0),
    (0x17E0, 0x17E9),
    (0x17F0, 0x17F9),
    (0x1810, 0x1819),
    (0x1946, 0x194F),
    (0x19D0, 0x19DA),
    (0x1A80, 0x1A89),
    (0x1A90, 0x1A99),
    (0x1B50, 0x1B59),
    (0x1BB0, 0x1BB9),
    (0x1C40, 0x1C49),
    (0x1C50, 0x1C59),
    (0x2070, 0x2070),
    (0x2074, 0x2079),
    (0x2080, 0x2089),
    (0x2150, 0x2182),
    (0x2185, 0x2189),
    (0x2460, 0x249B),
    (0x24EA, 0x24FF),
    (0x2776, 0x2793),
    (0x2CFD, 0x2CFD),
    (0x3192, 0x3195),
    (0x3220, 0x3229),
    (0x3248, 0x324F),
    (0x3251, 0x325F),
    (0x3280, 0x3289),
    (0x32B1, 0x32BF),
    (0xA620, 0xA629),
    (0xA6E6, 0xA6EF),
    (0xA830, 0xA835),
    (0xA8D0, 0xA8D9),
    (0xA900, 0xA909),
    (0xA9D0, 0xA9D9),
    (0xA9F0, 0xA9F9),
    (0xAA50, 0xAA59),
    (0xABF0, 0xABF9),
    (0xFF10, 0xFF19),
];

pub(crate) static LOWER: &[(u32, u32)] = &[
    (0x0061, 0x007A),
    (0x00AA, 0x00AA),
    (0x00B5, 0x00B5),
    (0x00BA, 0x00BA),
    (0x00DF, 0x00F6),
    (0x00F8, 0x00FF),
    (0x0101, 0x0101),
    (0x0103, 0x0103),
    (0x0105, 0x0105),
    (0x0107, 0x0107),
    (0x0109, 0x0109),
    (0x010B, 0x010B),
    (0x010D, 0x010D),
    (0x010F, 0x010F),
    (0x0111, 0x0111),
    (0x0113, 0x0113),
    (0x0115, 0x0115),
    (0x0117, 0x0117),
    (0x0119, 0x0119),
    (0x011B, 0x011B),
    (0x011D, 0x011D),
    (0x011F, 0x011F),
    (0x0121, 0x0121),
    (0x0123, 0x0123),
    (0x0125, 0x0125),
    (0x0127, 0x0127),
    (0x0129, 0x0129),
    (0x012B, 0x012B),
    (0x012D, 0x012D),
    (0x012F, 0x012F),
    (0x0131, 0x0131),
    (0x0133, 0x0133),
    (0x0135, 0x0135),
    (0x0137, 0x0138),
    (0x013A, 0x013A),
    (0x013C, 0x013C),
    (0x013E, 0x013E),
    (0x0140, 0x0140),
    (0x0142, 0x0142),
    (0x0144, 0x0144),
    (0x0146, 0x0146),
    (0x0148, 0x0149),
    (0x014B, 0x014B),
    (0x014D, 0x014D),
    (0x014F, 0x014F),
    (0x0151, 0x0151),
    (0x0153, 0x0153),
    (0x0155, 0x0155),
    (0x0157, 0x0157),
    (0x0159, 0x0159),
    (0x015B, 0x015B),
    (0x015D, 0x015D),
    (0x015F, 0x015F),
    (0x0161, 0x0161),
    (0x0163, 0x0163),
    (0x0165, 0x0165),
    (0x0167, 0x0167),
    (0x0169, 0x0169),
    (0x016B, 0x016B),
    (0x016D, 0x016D),
    (0x016F, 0x016F),
    (0x0171, 0x0171),
    (0x0173, 0x0173),
    (0x0175, 0x0175),
    (0x0177, 0x0177),
    (0x017A, 0x017A),
    (0x017C, 0x017C),
    (0x017E, 0x0180),
    (0x0183, 0x0183),
    (0x0185, 0x0185),
    (0x0188, 0x0188),
    (0x018C, 0x018D),
    (0x0192, 0x0192),
    (0x0195, 0x0195),
    (0x0199, 0x019B),
    (0x019E, 0x019E),
    (0x01A1, 0x01A1),
    (0x01A3, 0x01A3),
    (0x01A5, 0x01A5),
    (0x01A8, 0x01A8),
    (0x01AA, 0x01AB),
    (0x01AD, 0x01AD),
    (0x01B0, 0x01B0),
    (0x01B4, 0x01B4),
    (0x01B6, 0x01B6),
    (0x01B9, 0x01BA),
    (0x01BD, 0x01BF),
    (0x01C6, 0x01C6),
    (0x01C9, 0x01C9),
    (0x01CC, 0x01CC),
    (0x01CE, 0x01CE),
    (0x01D0, 0x01D0),
    (0x01D2, 0x01D2),
    (0x01D4, 0x01D4),
    (0x01D6, 0x01D6),
    (0x01D8, 0x01D8),
    (0x01DA, 0x01DA),
    (0x01DC, 0x01DD),
    (0x01DF, 0x01DF),
    (0x01E1, 0x01E1),
    (0x01E3, 0x01E3),
    (0x01E5, 0x01E5),
    (0x01E7, 0x01E7),
    (0x01E9, 0x01E9),
    (0x01EB, 0x01EB),
    (0x01ED, 0x01ED),
    (0x01EF, 0x01F0),
    (0x01F3, 0x01F3),
    (0x01F5, 0x01F5),
    (0x01F9, 0x01F9),
    (0x01FB, 0x01FB),
    (0x01FD, 0x01FD),
    (0x01FF, 0x01FF),
    (0x0201, 0x0201),
    (0x0203, 0x0203),
    (0x0205, 0x0205),
    (0x0207, 0x0207),
    (0x0209, 0x0209),
    (0x020B, 0x020B),
    (0x020D, 0x020D),
    (0x020F, 0x020F),
    (0x0211, 0x0211),
    (0x0213, 0x0213),
    (0x0215, 0x0215),
    (0x0217, 0x0217),
    (0x0219, 0x0219),
    (0x021B, 0x021B),
    (0x021D, 0x021D),
    (0x021F, 0x021F),
    (0x0221, 0x0221),
    (0x0223, 0x0223),
    (0x0225, 0x0225),
    (0x0227, 0x0227),
    (0x0229, 0x0229),
    (0x022B, 0x022B),
    (0x022D, 0x022D),
    (0x022F, 0x022F),
    (0x0231, 0x0231),
    (0x0233, 0x0239),
    (0x023C, 0x023C),
    (0x023F, 0x0240),
    (0x0242, 0x0242),
    (0x0247, 0x0247),
    (0x0249, 0x0249),
    (0x024B, 0x024B),
    (0x024D, 0x024D),
    (0x024F, 0x0293),
    (0x0295, 0x02B8),
    (0x02C0, 0x02C1),
    (0x02E0, 0x02E4),
    (0x0345, 0x0345),
    (0x0371, 0x0371),
    (0x0373, 0x0373),
    (0x0377, 0x0377),
    (0x037A, 0x037D),
    (0x0390, 0x0390),
    (0x03AC, 0x03CE),
    (0x03D0, 0x03D1),
    (0x03D5, 0x03D7),
    (0x03D9, 0x03D9),
    (0x03DB, 0x03DB),
    (0x03DD, 0x03DD),
    (0x03DF, 0x03DF),
    (0x03E1, 0x03E1),
    (0x03E3, 0x03E3),
    (0x03E5, 0x03E5),
    (0x03E7, 0x03E7),
    (0x03E9, 0x03E9),
    (0x03EB, 0x03EB),
    (0x03ED, 0x03ED),
    (0x03EF, 0x03F3),
    (0x03F5, 0x03F5),
    (0x03F8, 0x03F8),
    (0x03FB, 0x03FC),
    (0x0430, 0x045F),
    (0x0461, 0x0461),
    (0x0463, 0x0463),
    (0x0465, 0x0465),
    (0x0467, 0x0467),
    (0x0469, 0x0469),
    (0x046B, 0x046B),
    (0x046D, 0x046D),
    (0x046F, 0x046F),
    (0x0471, 0x0471),
    (0x0473, 0x0473),
    (0x0475, 0x0475),
    (0x0477, 0x0477),
    (0x0479, 0x0479),
    (0x047B, 0x047B),
    (0x047D, 0x047D),
    (0x047F, 0x047F),
    (0x0481, 0x0481),
    (0x048B, 0x048B),
    (0x048D, 0x048D),
    (0x048F, 0x048F),
    (0x0491, 0x0491),
    (0x0493, 0x0493),
    (0x0495, 0x0495),
    (0x0497, 0x0497),
    (0x0499, 0x0499),
    (0x049B, 0x049B),
    (0x049D, 0x049D),
    (0x049F, 0x049F),
    (0x04A1, 0x04A1),
    (0x04A3, 0x04A3),
    (0x04A5, 0x04A5),
    (0x04A7, 0x04A7),
    (0x04A9, 0x04A9),
    (0x04AB, 0x04AB),
    (0x04AD, 0x04AD),
    (0x04AF, 0x04AF),
    (0x04B1, 0x04B1),
    (0x04B3, 0x04B3),
    (0x04B5, 0x04B5),
    (0x04B7, 0x04B7),
    (0x04B9, 0x04B9),
    (0x04BB, 0x04BB),
    (0x04BD, 0x04BD),
    (0x04BF, 0x04BF),
    (0x04C2, 0x04C2),
    (0x04C4, 0x04C4),
    (0x04C6, 0x04C6),
    (0x04C8, 0x04C8),
    (0x04CA, 0x04CA),
    (0x04CC, 0x04CC),
    (0x04CE, 0x04CF),
    (0x04D1, 0x04D1),
    (0x04D3, 0x04D3),
    (0x04D5, 0x04D5),
    (0x04D7, 0x04D7),
    (0x04D9, 0x04D9),
    (0x04DB, 0x04DB),
    (0x04DD, 0x04DD),
    (0x04DF, 0x04DF),
    (0x04E1, 0x04E1),
    (0x04E3, 0x04E3),
    (0x04E5, 0x04E5),
    (0x04E7, 0x04E7),
    (0x04E9, 0x04E9),
    (0x04EB, 0x04EB),
    (0x04ED, 0x04ED),
    (0x04EF, 0x04EF),
    (0x04F1, 0x04F1),
    (0x04F3, 0x04F3),
    (0x04F5, 0x04F5),
    (0x04F7, 0x04F7),
    (0x04F9, 0x04F9),
    (0x04FB, 0x04FB),
    (0x04FD, 0x04FD),
    (0x04FF, 0x04FF),
    (0x0501, 0x0501),
    (0x0503, 0x0503),
    (0x0505, 0x0505),
    (0x0507, 0x0507),
    (0x0509, 0x0509),
    (0x050B, 0x050B),
    (0x050D, 0x050D),
    (0x050F, 0x050F),
    (0x0511, 0x0511),
    (0x0513, 0x0513),
    (0x0515, 0x0515),
    (0x0517, 0x0517),
    (0x0519, 0x0519),
    (0x051B, 0x051B),
    (0x051D, 0x051D),
    (0x051F, 0x051F),
    (0x0521, 0x0521),
    (0x0523, 0x0523),
    (0x0525, 0x0525),
    (0x0527, 0x0527),
    (0x0529, 0x0529),
    (0x052B, 0x052B),
    (0x052D, 0x052D),
    (0x052F, 0x052F),
    (0x0561, 0x0587),
    (0x13F8, 0x13FD),
    (0x1C80, 0x1C88),
    (0x1D00, 0x1DBF),
    (0x1E01, 0x1E01),
    (0x1E03, 0x1E03),
    (0x1E05, 0x1E05),
    (0x1E07, 0x1E07),
    (0x1E09, 0x1E09),
    (0x1E0B, 0x1E0B),
    (0x1E0D, 0x1E0D),
    (0x1E0F, 0x1E0F),
    (0x1E11, 0x1E11),
    (0x1E13, 0x1E13),
    (0x1E15, 0x1E15),
    (0x1E17, 0x1E17),
    (0x1E19, 0x1E19),
    (0x1E1B, 0x1E1B),
    (0x1E1D, 0x1E1D),
    (0x1E1F, 0x1E1F),
    (0x1E21, 0x1E21),
    (0x1E23, 0x1E23),
    (0x1E25, 0x1E25),
    (0x1E27, 0x1E27),
    (0x1E29, 0x1E29),
    (0x1E2B, 0x1E2B),
    (0x1E2D, 0x1E2D),
    (0x1E2F, 0x1E2F),
    (0x1E31, 0x1E31),
    (0x1E33, 0x1E33),
    (0x1E35, 0x1E35),
    (0x1E37, 0x1E37),
    (0x1E39, 0x1E39),
    (0x1E3B, 0x1E3B),
    (0x1E3D, 0x1E3D),
    (0x1E3F, 0x1E3F),
    (0x1E41, 0x1E41),
    (0x1E43, 0x1E43),
    (0x1E45, 0x1E45),
    (0x1E47, 0x1E47),
    (0x1E49, 0x1E49),
    (0x1E4B, 0x1E4B),
    (0x1E4D, 0x1E4D),
    (0x1E4F, 0x1E4F),
    (0x1E51, 0x1E51),
    (0x1E53, 0x1E53),
    (0x1E55, 0x1E55),
    (0x1E57, 0x1E57),
    (0x1E59, 0x1E59),
    (0x1E5B, 0x1E5B),
    (0x1E5D, 0x1E5D),
    (0x1E5F, 0x1E5F),
    (0x1E61, 0x1E61),
    (0x1E63, 0x1E63),
    (0x1E65, 0x1E65),
    (0x1E67, 0x1E67),
    (0x1E69, 0x1E69),
    (0x1E6B, 0x1E6B),
    (0x1E6D, 0x1E6D),
    (0x1E6F, 0x1E6F),
    (0x1E71, 0x1E71),
    (0x1E73, 0x1E73),
    (0x1E75, 0x1E75),
    (0x1E77, 0x1E77),
    (0x1E79, 0x1E79),
    (0x1E7B, 0x1E7B),
    (0x1E7D, 0x1E7D),
    (0x1E7F, 0x1E7F),
    (0x1E81, 0x1E81),
    (0x1E83, 0x1E83),
    (0x1E85, 0x1E85),
    (0x1E87, 0x1E87),
    (0x1E89, 0x1E89),
    (0x1E8B, 0x1E8B),
    (0x1E8D, 0x1E8D),
    (0x1E8F, 0x1E8F),
    (0x1E91, 0x1E91),
    (0x1E93, 0x1E93),
    (0x1E95, 0x1E9D),
    (0x1E9F, 0x1E9F),
    (0x1EA1, 0x1EA1),
    (0x1EA3, 0x1EA3),
    (0x1EA5, 0x1EA5),
    (0x1EA7, 0x1EA7),
    (0x1EA9, 0x1EA9),
    (0x1EAB, 0x1EAB),
    (0x1EAD, 0x1EAD),
    (0x1EAF, 0x1EAF),
    (0x1EB1, 0x1EB1),
    (0x1EB3, 0x1EB3),
    (0x1EB5, 0x1EB5),
    (0x1EB7, 0x1EB7),
    (0x1EB9, 0x1EB9),
    (0x1EBB, 0x1EBB),
    (0x1EBD, 0x1EBD),
    (0x1EBF, 0x1EBF),
    (0x1EC1, 0x1EC1),
    (0x1EC3, 0x1EC3),
    (0x1EC5, 0x1EC5),
    (0x1EC7, 0x1EC7),
    (0x1EC9, 0x1EC9),
    (0x1ECB, 0x1ECB),
    (0x1ECD, 0x1ECD),
    (0x1ECF, 0x1ECF),
    (0x1ED1, 0x1ED1),
    (0x1ED3, 0x1ED3),
    (0x1ED5, 0x1ED5),
    (0x1ED7, 0x1ED7),
    (0x1ED9, 0x1ED9),
    (0x1EDB, 0x1EDB),
    (0x1EDD, 0x1EDD),
    (0x1EDF, 0x1EDF),
    (0x1EE1, 0x1EE1),
    (0x1EE3, 0x1EE3),
    (0x1EE5, 0x1EE5),
    (0x1EE7, 0x1EE7),
    (0x1EE9, 0x1EE9),
    (0x1EEB, 0x1EEB),
    (0x1EED, 0x1EED),
    (0x1EEF, 0x1EEF),
    (0x1EF1, 0x1EF1),
    (0x1EF3, 0x1EF3),
    (0x1EF5, 0x1EF5),
    (0x1EF7, 0x1EF7),
    (0x1EF9, 0x1EF9),
    (0x1EFB, 0x1EFB),
    (0x1EFD, 0x1EFD),
    (0x1EFF, 0x1F07),
    (0x1F10, 0x1F15),
    (0x1F20, 0x1F27),
    (0x1F30, 0x1F37),
    (0x1F40, 0x1F45),
    (0x1F50, 0x1F57),
    (0x1F60, 0x1F67),
    (0x1F70, 0x1F7D),
    (0x1F80, 0x1F87),
    (0x1F90, 0x1F97),
    (0x1FA0, 0x1FA7),
    (0x1FB0, 0x1FB4),
    (0x1FB6, 0x1FB7),
    (0x1FBE, 0x1FBE),
    (0x1FC2, 0x1FC4),
    (0x1FC6, 0x1FC7),
    (0x1FD0, 0x1FD3),
    (0x1FD6, 0x1FD7),
    (0x1FE0, 0x1FE7),
    (0x1FF2, 0x1FF4),
    (0x1FF6, 0x1FF7),
    (0x2071, 0x2071),
    (0x207F, 0x207F),
    (0x2090, 0x209C),
    (0x210A, 0x210A),
    (0x210E, 0x210F),
    (0x2113, 0x2113),
    (0x212F, 0x212F),
    (0x2134, 0x2134),
    (0x2139, 0x2139),
    (0x213C, 0x213D),
    (0x2146, 0x2149),
    (0x214E, 0x214E),
    (0x2170, 0x217F),
    (0x2184, 0x2184),
    (0x24D0, 0x24E9),
    (0x25CC, 0x25CC),
    (0x2C30, 0x2C5E),
    (0x2C61, 0x2C61),
    (0x2C65, 0x2C66),
    (0x2C68, 0x2C68),
    (0x2C6A, 0x2C6A),
    (0x2C6C, 0x2C6C),
    (0x2C71, 0x2C71),
    (0x2C73, 0x2C74),
    (0x2C76, 0x2C7D),
    (0x2C81, 0x2C81),
    (0x2C83, 0x2C83),
    (0x2C85, 0x2C85),
    (0x2C87, 0x2C87),
    (0x2C89, 0x2C89),
    (0x2C8B, 0x2C8B),
    (0x2C8D, 0x2C8D),
    (0x2C8F, 0x2C8F),
    (0x2C91, 0x2C91),
    (0x2C93, 0x2C93),
    (0x2C95, 0x2C95),
    (0x2C97, 0x2C97),
    (0x2C99, 0x2C99),
    (0x2C9B, 0x2C9B),
    (0x2C9D, 0x2C9D),
    (0x2C9F, 0x2C9F),
    (0x2CA1, 0x2CA1),
    (0x2CA3, 0x2CA3),
    (0x2CA5, 0x2CA5),
    (0x2CA7, 0x2CA7),
    (0x2CA9, 0x2CA9),
    (0x2CAB, 0x2CAB),
    (0x2CAD, 0x2CAD),
    (0x2CAF, 0x2CAF),
    (0x2CB1, 0x2CB1),
    (0x2CB3, 0x2CB3),
    (0x2CB5, 0x2CB5),
    (0x2CB7, 0x2CB7),
    (0x2CB9, 0x2CB9),
    (0x2CBB, 0x2CBB),
    (0x2CBD, 0x2CBD),
    (0x2CBF, 0x2CBF),
    (0x2CC1, 0x2CC1),
    (0x2CC3, 0x2CC3),
    (0x2CC5, 0x2CC5),
    (0x2CC7, 0x2CC7),
    (0x2CC9, 0x2CC9),
    (0x2CCB, 0x2CCB),
    (0x2CCD, 0x2CCD),
    (0x2CCF, 0x2CCF),
    (0x2CD1, 0x2CD1),
    (0x2CD3, 0x2CD3),
    (0x2CD5, 0x2CD5),
    (0x2CD7, 0x2CD7),
    (0x2CD9, 0x2CD9),
    (0x2CDB, 0x2CDB),
    (0x2CDD, 0x2CDD),
    (0x2CDF, 0x2CDF),
    (0x2CE1, 0x2CE1),
    (0x2CE3, 0x2CE4),
    (0x2CEC, 0x2CEC),
    (0x2CEE, 0x2CEE),
    (0x2CF3, 0x2CF3),
    (0x2D00, 0x2D25),
    (0x2D27, 0x2D27),
    (0x2D2D, 0x2D2D),
    (0xA641, 0xA641),
    (0xA643, 0xA643),
    (0xA645, 0xA645),
    (0xA647, 0xA647),
    (0xA649, 0xA649),
    (0xA64B, 0xA64B),
    (0xA64D, 0xA64D),
    (0xA64F, 0xA64F),
    (0xA651, 0xA651),
    (0xA653, 0xA653),
    (0xA655, 0xA655),
    (0xA657, 0xA657),
    (0xA659, 0xA659),
    (0xA65B, 0xA65B),
    (0xA65D, 0xA65D),
    (0xA65F, 0xA65F),
    (0xA661, 0xA661),
    (0xA663, 0xA663),
    (0xA665, 0xA665),
    (0xA667, 0xA667),
    (0xA669, 0xA669),
    (0xA66B, 0xA66B),
    (0xA66D, 0xA66D),
    (0xA681, 0xA681),
    (0xA683, 0xA683),
    (0xA685, 0xA685),
    (0xA687, 0xA687),
    (0xA689, 0xA689),
    (0xA68B, 0xA68B),
    (0xA68D, 0xA68D),
    (0xA68F, 0xA68F),
    (0xA691, 0xA691),
    (0xA693, 0xA693),
    (0xA695, 0xA695),
    (0xA697, 0xA697),
    (0xA699, 0xA699),
    (0xA69B, 0xA69D),
    (0xA723, 0xA723),
    (0xA725, 0xA725),
    (0xA727, 0xA727),
    (0xA729, 0xA729),
    (0xA72B, 0xA72B),
    (0xA72D, 0xA72D),
    (0xA72F, 0xA731),
    (0xA733, 0xA733),
    (0xA735, 0xA735),
    (0xA737, 0xA737),
    (0xA739, 0xA739),
    (0xA73B, 0xA73B),
    (0xA73D, 0xA73D),
    (0xA73F, 0xA73F),
    (0xA741, 0xA741),
    (0xA743, 0xA743),
    (0xA745, 0xA745),
    (0xA747, 0xA747),
    (0xA749, 0xA749),
    (0xA74B, 0xA74B),
    (0xA74D, 0xA74D),
    (0xA74F, 0xA74F),
    (0xA751, 0xA751),
    (0xA753, 0xA753),
    (0xA755, 0xA755),
    (0xA757, 0xA757),
    (0xA759, 0xA759),
    (0xA75B, 0xA75B),
    (0xA75D, 0xA75D),
    (0xA75F, 0xA75F),
    (0xA761, 0xA761),
    (0xA763, 0xA763),
    (0xA765, 0xA765),
    (0xA767, 0xA767),
    (0xA769, 0xA769),
    (0xA76B, 0xA76B),
    (0xA76D, 0xA76D),
    (0xA76F, 0xA778),
    (0xA77A, 0xA77A),
    (0xA77C, 0xA77C),
    (0xA77F, 0xA77F),
    (0xA781, 0xA781),
    (0xA783, 0xA783),
    (0xA785, 0xA785),
    (0xA787, 0xA787),
    (0xA78C, 0xA78C),
    (0xA78E, 0xA78E),
    (0xA791, 0xA791),
    (0xA793, 0xA795),
    (0xA797, 0xA797),
    (0xA799, 0xA799),
    (0xA79B, 0xA79B),
    (0xA79D, 0xA79D),
    (0xA79F, 0xA79F),
    (0xA7A1, 0xA7A1),
    (0xA7A3, 0xA7A3),
    (0xA7A5, 0xA7A5),
    (0xA7A7, 0xA7A7),
    (0xA7A9, 0xA7A9),
    (0xA7B5, 0xA7B5),
    (0xA7B7, 0xA7B7),
    (0xA7F8, 0xA7FA),
    (0xAB30, 0xAB5A),
    (0xAB5C, 0xAB65),
    (0xAB70, 0xABBF),
    (0xFB00, 0xFB06),
    (0xFB13, 0xFB17),
    (0xFF41, 0xFF5A),
    (0x10428, 0x1044F),
    (0x104D8, 0x104FB),
    (0x10CC0, 0x10CF2),
    (0x118C0, 0x118DF),
    (0x1D41A, 0x1D433),
    (0x1D44E, 0x1D454),
    (0x1D456, 0x1D467),
    (0x1D482, 0x1D49B),
    (0x1D4B6, 0x1D4B9),
    (0x1D4BB, 0x1D4BB),
    (0x1D4BD, 0x1D4C3),
    (0x1D4C5, 0x1D4CF),
    (0x1D4EA, 0x1D503),
    (0x1D51E, 0x1D537),
    (0x1D552, 0x1D56B),
    (0x1D586, 0x1D59F),
    (0x1D5BA, 0x1D5D3),
    (0x1D5EE, 0x1D607),
    (0x1D622, 0x1D63B),
    (0x1D656, 0x1D66F),
    (0x1D68A, 0x1D6A5),
    (0x1D6C2, 0x1D6DA),
    (0x1D6DC, 0x1D6E1),
    (0x1D6FC, 0x1D714),
    (0x1D716, 0x1D71B),
    (0x1D736, 0x1D74E),
    (0x1D750, 0x1D755),
    (0x1D770, 0x1D788),
    (0x1D78A, 0x1D78F),
    (0x1D7AA, 0x1D7C2),
    (0x1D7C4, 0x1D7C9),
    (0x1D7CB, 0x1D7CB),
    (0x1E922, 0x1E943),
];

pub(crate) static CURRENCY: &[(u32, u32)] = &[
    (0x000A, 0x000A),
    (0x0024, 0x0024),
    (0x00A2, 0x00A5),
    (0x058F, 0x058F),
    (0x060B, 0x060B),
    (0x09F2, 0x09F3),
    (0x09FB, 0x09FB),
    (0x0AF1, 0x0AF1),
    (0x0BF9, 0x0BF9),
    (0x0E3F, 0x0E3F),
    (0x17DB, 0x17DB),
    (0x20A0, 0x20BD),
    (0xA838, 0xA838),
    (0xFDFC, 0xFDFC),
    (0xFE69, 0xFE69),
    (0xFF04, 0xFF04),
    (0xFFE0, 0xFFE1),
    (0xFFE5, 0xFFE6),
];

pub(crate) static SYMBOL_OTHER: &[(u32, u32)] = &[
    (0x000A, 0x000A),
    (0x00A6, 0x00A6),
    (0x00A9, 0x00A9),
    (0x00AE, 0x00AE),
    (0x00B0, 0x00B0),
    (0x0482, 0x0482),
    (0x058D, 0x058E),
    (0x060E, 0x060F),
    (0x06DE, 0x06DE),
    (0x06E9, 0x06E9),
    (0x06FD, 0x06FE),
    (0x07F6, 0x07F6),
    (0x09FA, 0x09FA),
    (0x0B70, 0x0B70),
    (0x0BF3, 0x0BF8),
    (0x0BFA, 0x0BFA),
    (0x0C7F, 0x0C7F),
    (0x0D79, 0x0D79),
    (0x0F01, 0x0F03),
    (0x0F13, 0x0F13),
    (0x0F15, 0x0F17),
    (0x0F1A, 0x0F1F),
    (0x0F34, 0x0F34),
    (0x0F36, 0x0F36),
    (0x0F38, 0x0F38),
    (0x0FBE, 0x0FC5),
    (0x0FC7, 0x0FCC),
    (0x0FCE, 0x0FCF),
    (0x0FD5, 0x0FD8),
    (0x109E, 0x109F),
    (0x1390, 0x1399),
    (0x1940, 0x1940),
    (0x19DE, 0x19FF),
    (0x1B61, 0x1B6A),
    (0x1B74, 0x1B7C),
    (0x2100, 0x2101),
    (0x2103, 0x2106),
    (0x2108, 0x2109),
    (0x2114, 0x2114),
    (0x2116, 0x2117),
    (0x211E, 0x2123),
    (0x2125, 0x2125),
    (0x2127, 0x2127),
    (0x2129, 0x2129),
    (0x212E, 0x212E),
    (0x213A, 0x213B),
    (0x214A, 0x214A),
    (0x214C, 0x214D),
    (0x214F, 0x214F),
    (0x2195, 0x2199),
    (0x219C, 0x219F),
    (0x21A1, 0x21A2),
    (0x21A4, 0x21A5),
    (0x21A7, 0x21AD),
    (0x21AF, 0x21CD),
    (0x21D0, 0x21D1),
    (0x21D3, 0x21D3),
    (0x21D5, 0x21F3),
    (0x2300, 0x2307),
    (0x230C, 0x231F),
    (0x2322, 0x2328),
    (0x232B, 0x237B),
    (0x237D, 0x239A),
    (0x23B4, 0x23DB),
    (0x23E2, 0x23FA),
    (0x2400, 0x2426),
    (0x2440, 0x244A),
    (0x249C, 0x24E9),
    (0x2500, 0x25B6),
    (0x25B8, 0x25C0),
    (0x25C2, 0x25F7),
    (0x2600, 0x266E),
    (0x2670, 0x2767),
    (0x2794, 0x27BF),
    (0x2800, 0x28FF),
    (0x2B00, 0x2B2F),
    (0x2B45, 0x2B46),
    (0x2B4D, 0x2B73),
    (0x2B76, 0x2B95),
    (0x2B98, 0x2BB9),
    (0x2BBD, 0x2BC8),
    (0x2BCA, 0x2BD1),
    (0x2CE5, 0x2CEA),
    (0x2FF0, 0x2FFB),
    (0x3004, 0x3004),
    (0x3012, 0x3013),
    (0x3020, 0x3020),
    (0x3036, 0x3037),
    (0x303E, 0x303F),
    (0x3190, 0x3191),
    (0x3196, 0x319F),
    (0x31C0, 0x31E3),
    (0x3200, 0x321E),
    (0x322A, 0x3247),
    (0x3250, 0x3250),
    (0x3260, 0x327F),
    (0x328A, 0x32B0),
    (0x32C0, 0x32FE),
    (0x3300, 0x33FF),
    (0x4DC0, 0x4DFF),
    (0xA490, 0xA4C6),
    (0xA828, 0xA82B),
    (0xA836, 0xA837),
    (0xA839, 0xA839),
    (0xAA77, 0xAA79),
    (0xFDFD, 0xFDFD),
    (0xFFE4, 0xFFE4),
    (0xFFE8, 0xFFE8),
    (0xFFED, 0xFFEE),
    (0xFFFC, 0xFFFD),
];
