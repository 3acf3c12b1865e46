#pragma once

// Frozen values produced once by tests/oracle/ascon_ref.py (a slow,
// table-driven model that first reproduces every record of both bundled KAT
// files). The permutation values were also cross-checked against an unrelated
// third-party implementation.

#include "ascon/permutation.hpp"

namespace oracle {

// permute(IV_ascon128 || 0^256, 12)
inline constexpr ascon::State kZeroKeyPermuted{
    0xB8DFF46B0DB421F8, 0xED0232A7C68DED74, 0x138A46B172B225F9,
    0xFA8EAAAAC685D26A, 0xF044217FBE57E755};

inline constexpr ascon::State kSampleState{
    0x0123456789ABCDEF, 0xFEDCBA9876543210, 0x0F1E2D3C4B5A6978,
    0x8877665544332211, 0xDEADBEEFCAFEBABE};

inline constexpr ascon::State kSampleTwice6{
    0xE55F81C0DB895DCF, 0x9DE0ECB1DCB74E28, 0x9C37B06CD1FA78F5,
    0x0947AAF2FAF2703D, 0x0C72226C4CAAD324};

inline constexpr ascon::State kSample12{
    0xED2A085DE4761111, 0xA0B7C31F21BCFD68, 0x6B43D50F2C4E4262,
    0x11B4891DC7C60368, 0x82F7304F8B8D34BE};

// KAT Count 336 (|PT| = 10, |AD| = 5), Key = Nonce = 000102...0F.
inline constexpr unsigned kPhaseCount = 336;

inline constexpr ascon::State kAscon128PostInit{
    0xBC830FBEF3A1651B, 0x487A66865036B909, 0xA031B0C5810C1CD6,
    0xDD7CE72083702217, 0x9B17156EDE557CE7};
inline constexpr ascon::State kAscon128PostAd{
    0x0E6B890FA112F33A, 0xD87A40438A6842A2, 0x1C751056A4B73EC7,
    0x8949421DC99A0633, 0x79A99516EEC25A42};
inline constexpr ascon::State kAscon128PostData{
    0x3D726BD3DB395F13, 0x57E72A09257EFF51, 0xACEA4904C261B6E1,
    0xBFEFD0384AB23735, 0xAB9CD8E4D95C88C8};

inline constexpr ascon::State kAscon128aPostInit{
    0x6E480EFDD1B65260, 0x6F3C06D33047C1B2, 0x63A829BEB8AAD370,
    0xA282E964B4B757EC, 0x03BF3B375A49AE6D};
inline constexpr ascon::State kAscon128aPostAd{
    0x0EE1AEBB1BDF0314, 0xB3404B3F99675525, 0xFB31316479CEC759,
    0xFE0A5029662604EB, 0x3366FC7D6C57E00D};
inline constexpr ascon::State kAscon128aPostData{
    0x0EE0ACB81FDA0513, 0xBB49CB3F99675525, 0xFB31316479CEC759,
    0xFE0A5029662604EB, 0x3366FC7D6C57E00D};

}  // namespace oracle
