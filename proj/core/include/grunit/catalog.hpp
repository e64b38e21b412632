#pragma once

#include <vector>

#include "grunit/group.hpp"
#include "grunit/group_ring.hpp"
#include "grunit/rings.hpp"

namespace grunit {

// The two 21-element supports in display order: g from alpha, h from beta.
struct SupportPair {
    GroupHandle group;
    std::vector<GroupElement> g_list;
    std::vector<GroupElement> h_list;
    std::vector<Word> g_words;
    std::vector<Word> h_words;
};

// Builds a support pair from words; throws std::invalid_argument on repeated elements.
SupportPair make_support_pair(GroupHandle group, std::vector<Word> g_words, std::vector<Word> h_words);

// The unit alpha = alpha_1 + s alpha_a a + t alpha_b b + s t alpha_ab ab over R[P] and its inverse.
GroupRingElem<CycloBivariate> catalog_alpha_R();
GroupRingElem<CycloBivariate> catalog_beta_R();
SupportPair catalog_supports();

GeneratorMap catalog_phi0();  // a -> a^-1, b -> b^-1 (an involution)
GeneratorMap catalog_phi1();  // a -> a, b -> b^-1 (an involution)
GroupCharacter<CycloBivariate> catalog_chi0();  // a -> -s^2, b -> -t^2
GroupCharacter<CycloBivariate> catalog_chi1();  // a -> s^2, b -> -1
TwistedAutomorphism<CycloBivariate> catalog_theta0();
TwistedAutomorphism<CycloBivariate> catalog_theta1();
// Conjugation s -> s^-1, t -> t^-1 followed by the gauge a -> s^2, b -> t^2.
TwistedAutomorphism<CycloBivariate> catalog_conjugation_gauge();
SignedCharacter<CycloBivariate> catalog_rho();  // a -> {+-s}, b -> {+-t}

// chi0 and chi1 pushed to {+-1, +-iota} along s, t -> zeta8, zeta8^2 -> iota.
GroupCharacter<GaussianInt> catalog_chi0_gaussian();
GroupCharacter<GaussianInt> catalog_chi1_gaussian();

// The 29-term unit nu over F_2[S].
GroupRingElem<PrimeField> catalog_nu_F2();
const std::vector<Word>& catalog_nu_words();
GeneratorMap catalog_phi_S();          // x -> y, y -> x^-1
GeneratorMap catalog_phi_S_inverse();  // x -> y^-1, y -> x
TwistedAutomorphism<PrimeField> catalog_phi_S_twisted();

}  // namespace grunit
