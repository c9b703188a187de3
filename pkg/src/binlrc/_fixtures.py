# Published desired matrices, keyed by (b, s). Rows are top to bottom; the
# bottom 2b - s rows form the block whose columns are pairwise distinct.

FIXTURES: dict[tuple[int, int], list[str]] = {
    (3, 2): [
        "10000010",
        "01000001",
        "11100000",
        "10010011",
        "01001010",
        "01000111",
    ],
    (4, 3): [
        "0010010001101011",
        "0010000010001111",
        "0100000100011110",
        "1000000001001110",
        "0101000011111100",
        "0110100001011001",
        "0110011000111110",
        "0000010111011101",
    ],
    (5, 4): [
        "10000000001001011101011010111010",
        "01000000000100101110101101011101",
        "00100000001100000001000101111101",
        "00010000001000010110110001101101",
        "10001010001000111010011001011101",
        "01001001011001110100010111001101",
        "00100001000111101010010010101111",
        "00010000101111010001000000011000",
        "00000110000000100010111110100010",
        "00000000100101110101101011101001",
    ],
    (6, 4): [
        "1000000000001011001110100100110101000100100010101100100101110011",
        "0100000000001000010011101010111100100101010010011110101011100100",
        "0010000000000100001001110101011110010010101001001111010101110010",
        "0001000000000010000100111010101111001001010100100111101010111001",
        "1000000110000110000001010101101110111001001010010011101110110101",
        "0100000010100000010011010110100001100011111111000110000101101011",
        "0010000010011011011010101011011011001000001000110100011110001011",
        "0001000110100011110001011000100000100110110110101010110110110010",
        "0000100100110010010000011001111011010110101010101101011011110011",
        "0000010100101110100000100111011000001101110010000010111010010100",
        "0000001100101101001100000000101111100111011101011101110011111010",
        "0000000001011001110100100110101000100100010101100100101110011010",
    ],
    (7, 4): [
        "1000000000000001010010010111001011010111100011101101001000010001"
        "0111110010011111010001000010010110111000111101011010011101001001",
        "0100000000000010001101100101110011000100110110101100110100101010"
        "0100011101110001001010100101100110101101100100011001110100110110",
        "0010000000000001000110110010111001100010011011010110011010010101"
        "0010001110111000100101010010110011010110110010001100111010011011",
        "0001000000000010000111110111001010011110001010110001011101101000"
        "0110100011100010110000101101110100011010100011110010100111011111",
        "1000000000111001110101011100111000000000100000101111100101101100"
        "1101010011111110100100100101111111001010110011011010011111010000",
        "0100000000001101010110000000000100100110100101110001010111100100"
        "0101000111110110000110111110001010001001111010100011101001011001",
        "0010000000100111010110110010100101110001111110101111110001110100"
        "1010011011010111001000000010000011101100000001111000000011011100",
        "0001000000101110000101001110001100110001110010100001110100000010"
        "0000100101110111010101101111110011100111111011010101110111010010",
        "0000100000100101110111010101101111110011100111111011010101110111"
        "0100100000100000010111000010100111000110011000111001010000111010",
        "0000010000010111110010110110011010100111111101001001001011111110"
        "0101011001101101001111101000001000000000111001110101011100111000",
        "0000001000110011011110010000111110000100111101100110001000000010"
        "1000001101010111010010010011101101110010010010111010101100000101",
        "0000000100100011101100101101111010111010011010101011111001011110"
        "0001000011110100111110101010110010111010111101101001101110001001",
        "0000000010010011010010111000101011110010001010001111101100001101"
        "1111000101000100111101010001110100101100100100000000001101010110",
        "0000000001110001001110010111100110101110000110000101011011111011"
        "0101000011000011101011001111010011100100011100000000000100110010",
    ],
}
