#pragma once
// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.

#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct ThetaRow {
  cplx tau, t2, t3, t4, eta, e2, g2, g3, J;
};

inline const std::vector<ThetaRow> theta_rows{
    {{0.1, 1.2}, {0.77723484708597517661, 0.061413924767336192354}, {1.043851699121853953, 0.014248761348067471589}, {0.95614865004728904298, -0.014247686715944383141}, {0.72984435938008300546, 0.018883192520034099704}, {0.98967405352314457407, -0.0075170332429234778744}, {8.9566433263661389522, 0.61333653005714442133}, {3.4798768645897270827, -0.72076195368346573744}, {1.361489734480737623, -0.600989266926952605}},
    {{1.0 / 3, 1}, {0.87960071568236595239, 0.23721505889737256592}, {1.0432104309203649437, 0.074842661772837840008}, {0.95678259439492263827, -0.074854742281126521893}, {0.76756214247399513466, 0.065905821087742018018}, {1.0225342329369480754, -0.038596620915905395698}, {6.2681467444861352016, 3.0977502766874712398}, {6.6709669810192729827, -3.4043426067205160327}, {0.1507194947477910821, -0.12155403422461881975}},
    {{-0.4, 0.7}, {1.0841663199471591756, -0.36104216826952449151}, {1.0686342495744508756, -0.21065903381325927322}, {0.93155272758799087459, 0.21123449034793000711}, {0.83680777459719109849, -0.082020616070546884265}, {1.2353865063533595887, 0.16331080488713765268}, {-10.418933788291664134, -11.655992149931025823}, {23.038475717878228402, 6.5036999283947717194}, {-0.041369846595151262778, 0.26193939695223693294}},
    {{0.25, 0.5}, {1.313151038985045794, 0.32059301500786229896}, {1.2902522560067631652, 0.29398714144585602937}, {0.70227797311505110642, -0.29398714144585602937}, {0.87954174363898772974, 0.019655177733257701608}, {1.1338718743734495606, -1.0294085318222850853}, {-24.132860662339668867, 79.823289693452807529}, {134.53985333582141723, -53.814533230444367123}, {4.5858275866372635884, -12.77932593219035566}},
};

struct KRow {
  cplx k, K, Kp;
};

inline const std::vector<KRow> k_rows{
    {{0.3, 0.1}, {1.6027658454547051434, 0.025832282271361217051}, {2.5741161116429017002, -0.30326020169830006261}},
    {{0.9, -0.2}, {1.9022686070577670476, -0.43305785383307733519}, {1.6307529268751328547, 0.175338649120041176}},
    {{0.05, 0.01}, {1.5717398570588243162, 0.00039376187191723248562}, {4.3644853514894930387, -0.19667136325927345318}},
    {{1.3, 0.4}, {1.4009908983168470401, 0.8039794952482176669}, {1.3289845622500069122, -0.21545628659460945956}},
};

struct HypRow {
  cplx z, f;
};

inline const std::vector<HypRow> hyp_rows{
    {{0.3, 0.2}, {1.0797813349044435057, 0.072253178788058791787}},
    {{-0.8, 0.1}, {0.85829300106296999737, 0.012782786316777488334}},
};

struct WpRow {
  cplx tau, z, p;
};

inline const std::vector<WpRow> wp_rows{
    {{0.1, 1.2}, {0.3, 0.2}, {2.975993166003842481, -7.0435989940000783196}},
    {{-0.4, 0.7}, {0.5, -0.1}, {3.4196961528287955815, 1.3650734317978045644}},
};

struct ChiRow {
  cplx tau, chi, bracket;
};

inline const std::vector<ChiRow> chi_rows{
    {{0.1, 1.2}, {-0.53677768196183226456, 0.055900425749254015774}, {-58.656987455704494274, 37.900343955441197455}},
    {{-0.3, 0.8}, {-0.2863927500625456248, -0.21521713656865706808}, {-1.0832939208650009981, -6.9023057910354023446}},
};

inline const cplx quintic_a{0.3, 0.2};
inline const std::vector<cplx> quintic_roots{
    {-1.0670460369548335631, -0.036585366983720326352},
    {-0.091571002017614751855, 0.96602366570463582433},
    {-0.058790795642632963499, -1.0527363581973281074},
    {0.29431877591118361208, 0.20084411911256630066},
    {0.92308905870389766634, -0.077546059636153691279},
};

inline constexpr double lemniscate = 1.854074677301371918434;
inline constexpr double g2_at_i = 11.81704500807711576832;

}  // namespace oracle
