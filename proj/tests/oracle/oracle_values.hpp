// Generated by generate_oracles.py; do not edit by hand.
#ifndef LISTRANK_TESTS_ORACLE_VALUES_HPP_
#define LISTRANK_TESTS_ORACLE_VALUES_HPP_

#include <array>

namespace listrank::oracle {

inline constexpr double kLogLikUniform3 = -1.791759469228055;
inline constexpr double kLogLikLn2Pair = -0.40546510810816444;
inline constexpr double kGradPairA = 0.5;
inline constexpr double kGradPairB = -0.5;
inline constexpr double kBradleyTerryGap = 0.6931471748744061;
inline constexpr double kPairVariance = 4.0;
inline constexpr double kNdcgDepth2 = 0.6131471927654584;
inline constexpr double kTauOneSwap = 0.33333333333333337;
inline constexpr double kChiSquare5Dof99 = 15.08627246938899;
inline constexpr double kPermutationMassK4 = 0.9999999999999999;
inline constexpr std::array<int, 4> kBoundaryRanks = {2, 3, 4, 5};

}  // namespace listrank::oracle

#endif  // LISTRANK_TESTS_ORACLE_VALUES_HPP_
