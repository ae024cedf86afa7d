#pragma once

#include <vector>

namespace ixdelay::reference {

struct CurvePoint {
  double x;
  double y;
};

// Probability of zero delay vs λΔd.
inline const std::vector<CurvePoint> kProbabilityZero{
    {0, 1}, {0.1, 0.950043106396634}, {0.2, 0.900354327806761}, {0.3, 0.851220706624273},
    {0.4, 0.802935405882331}, {0.5, 0.755782394184816}, {0.6, 0.710023038886288}, {0.7, 0.66588555944399},
    {0.8, 0.623557853702323}, {0.9, 0.583183768074769}, {1, 0.544862512468571}, {1.1, 0.508650666508067},
    {1.2, 0.474566096602553}, {1.3, 0.44259308897361}, {1.4, 0.412688072023055}, {1.5, 0.384785418207774},
    {1.6, 0.358802950395725}, {1.7, 0.334646907891192}, {1.8, 0.312216239137689}, {1.9, 0.291406175389907},
    {2, 0.272111101803196}, {2.1, 0.254226782201912}, {2.2, 0.237652015607469}, {2.3, 0.222289811098594},
    {2.4, 0.208048166978768}, {2.5, 0.194840534008335}, {2.6, 0.182586033241344}, {2.7, 0.171209488631106},
    {2.8, 0.160641324233801}, {2.9, 0.150817366257858}, {3, 0.141678581741492}, {3.1, 0.133170778421523},
    {3.2, 0.125244284367924}, {3.3, 0.11785362110226}, {3.4, 0.11095718005678}, {3.5, 0.10451690921462},
    {3.6, 0.0984980144549617}, {3.7, 0.0928686783778344}, {3.8, 0.0875997980863778}, {3.9, 0.0826647424624717},
    {4, 0.0780391288045684}, {4.1, 0.0737006182393335}, {4.2, 0.0696287290196165}, {4.3, 0.0658046666396206},
    {4.4, 0.0622111696023174}, {4.5, 0.0588323696398381}, {4.6, 0.0556536651963035}, {4.7, 0.0526616070204188},
    {4.8, 0.0498437947718377}, {4.9, 0.047188783613197}, {5, 0.044685999833375}, {5.1, 0.0423256646230368},
    {5.2, 0.0400987251982152}, {5.3, 0.0379967925397438}, {5.4, 0.0360120850846592}, {5.5, 0.0341373777695656},
    {5.6, 0.0323659558850783}, {5.7, 0.030691573254754}, {5.8, 0.0291084143014505}, {5.9, 0.0276110596090289},
    {6, 0.0261944546279714}, {6.1, 0.0248538812101305}, {6.2, 0.0235849316907653}, {6.3, 0.0223834852655627},
    {6.4, 0.0212456864368033}, {6.5, 0.0201679253264937}, {6.6, 0.0191468196754312}, {6.7, 0.0181791983660467},
    {6.8, 0.0172620863237177}, {6.9, 0.0163926906662762}, {7, 0.0155683879848437}, {7.1, 0.0147867126510844},
    {7.2, 0.0140453460566401}, {7.3, 0.01334210670003}, {7.4, 0.0126749410447999}, {7.5, 0.012041915080292},
    {7.6, 0.0114412065231888}, {7.7, 0.0108710976040476}, {7.8, 0.0103299683884592},
    {7.9, 0.00981629058731967}, {8, 0.00932862181504897}, {8.1, 0.00886560025848372},
    {8.2, 0.00842593972266551}, {8.3, 0.00800842502288188}, {8.4, 0.00761190769513338},
    {8.5, 0.00723530199973321}, {8.6, 0.00687758119502488}, {8.7, 0.00653777406025579},
    {8.8, 0.00621496164849524}, {8.9, 0.00590827425215433}, {9, 0.00561688856517314},
    {9.1, 0.0053400250273032}, {9.2, 0.00507694533714574}, {9.3, 0.0048269501217231},
    {9.4, 0.00458937675137208}, {9.5, 0.00436359728966644}, {9.6, 0.00414901656890907},
    {9.7, 0.00394507038249244}, {9.8, 0.00375122378611513}, {9.9, 0.0035669695004702},
    {10, 0.00339182640859347}};

// Probability of delay Δd vs λΔd.
inline const std::vector<CurvePoint> kProbabilityDeltaD{
    {0, 0}, {0.1, 0.00124714193392705}, {0.2, 0.00495458094441947}, {0.3, 0.0110226349245539},
    {0.4, 0.0192924806308653}, {0.5, 0.0295561963815835}, {0.6, 0.0415691473774646}, {0.7, 0.0550634115161676},
    {0.8, 0.0697609934386919}, {0.9, 0.0853857901482672}, {1, 0.101673586085953}, {1.1, 0.118379697234631},
    {1.2, 0.135284193352549}, {1.3, 0.152194867431669}, {1.4, 0.168948277622802}, {1.5, 0.185409263261827},
    {1.6, 0.201469348630461}, {1.7, 0.217044415445607}, {1.8, 0.232071966863217}, {1.9, 0.24650823751003},
    {2, 0.260325336646403}, {2.1, 0.273508551599106}, {2.2, 0.286053889189655}, {2.3, 0.297965894692143},
    {2.4, 0.309255760069474}, {2.5, 0.319939714295905}, {2.6, 0.330037676673721}, {2.7, 0.339572147456797},
    {2.8, 0.348567307293205}, {2.9, 0.357048296766592}, {3, 0.365040648708158}, {3.1, 0.372569848274597},
    {3.2, 0.379660998555509}, {3.3, 0.386338572360434}, {3.4, 0.392626233634783}, {3.5, 0.398546714545697},
    {3.6, 0.404121736602831}, {3.7, 0.409371966214418}, {3.8, 0.414316996829501}, {3.9, 0.418975351301413},
    {4, 0.423364499351369}, {4.1, 0.427500886043188}, {4.2, 0.431399968029682}, {4.3, 0.435076255025361},
    {4.4, 0.4385433545235}, {4.5, 0.441814018230217}, {4.6, 0.444900189052897}, {4.7, 0.447813047771195},
    {4.8, 0.450563058749531}, {4.9, 0.453160014231866}, {5, 0.455613076901912}, {5.1, 0.457930820502578},
    {5.2, 0.460121268393709}, {5.3, 0.462191929992139}, {5.4, 0.464149835086976}, {5.5, 0.466001566059216},
    {5.6, 0.467753288060977}, {5.7, 0.469410777228012}, {5.8, 0.470979447011463}, {5.9, 0.472464372722448},
    {6, 0.473870314387117}, {6.1, 0.475201738011183}, {6.2, 0.476462835352262}, {6.3, 0.477657542296249},
    {6.4, 0.478789555930807}, {6.5, 0.479862350405162}, {6.6, 0.480879191661085}, {6.7, 0.48184315111536},
    {6.8, 0.48275711836932}, {6.9, 0.483623813016349}, {7, 0.484445795613625}, {7.1, 0.485225477879856},
    {7.2, 0.485965132176499}, {7.3, 0.486666900325794}, {7.4, 0.487332801815066}, {7.5, 0.487964741433112},
    {7.6, 0.48856451638098}, {7.7, 0.489133822896319}, {7.8, 0.489674262427408}, {7.9, 0.49018734739025},
    {8, 0.490674506539494}, {8.1, 0.491137089981584}, {8.2, 0.491576373856327}, {8.3, 0.491993564711013},
    {8.4, 0.49238980358937}, {8.5, 0.492766169855888}, {8.6, 0.493123684774447}, {8.7, 0.49346331485874},
    {8.8, 0.4937859750106}, {8.9, 0.494092531461138}, {9, 0.49438380452841}, {9.1, 0.49466057120433},
    {9.2, 0.494923567582549}, {9.3, 0.49517349113814}, {9.4, 0.495411002869127}, {9.5, 0.495636729309129},
    {9.6, 0.49585126441971}, {9.7, 0.496055171370393}, {9.8, 0.49624898421371}, {9.9, 0.496433209462111},
    {10, 0.496608327573097}};

// Delay CDF at λ = 1, Δd = 1; t ≥ Δd reads 1.
inline const std::vector<CurvePoint> kCdfDeltaD1{
    {0, 0.544862512468571}, {0.1, 0.57870433703729}, {0.2, 0.615448935045106}, {0.3, 0.654930679882148},
    {0.4, 0.697015294285577}, {0.5, 0.741597182612254}, {0.6, 0.788597056746132}, {0.7, 0.837959828585836},
    {0.8, 0.88965274473412}, {0.9, 0.943663741434946}, {1, 1}, {1, 1}, {2, 1}};

// Delay CDF at λ = 1, Δd = 2; t ≥ Δd reads 1.
inline const std::vector<CurvePoint> kCdfDeltaD2{
    {0, 0.272111101803196}, {0.2, 0.32767298124413}, {0.4, 0.387421587480993}, {0.6, 0.450883343544667},
    {0.8, 0.517816075991622}, {1, 0.588171381217475}, {1.2, 0.662065313562302}, {1.4, 0.73975594489743},
    {1.6, 0.821626623874399}, {1.8, 0.908173991764305}, {2, 1}, {2, 1}, {4, 1}};

// Delay CDF at λ = 1, Δd = 3; t ≥ Δd reads 1.
inline const std::vector<CurvePoint> kCdfDeltaD3{
    {0, 0.141678581741492}, {0.3, 0.218072795854256}, {0.6, 0.294923886968054}, {0.9, 0.372198666182505},
    {1.2, 0.450331102420687}, {1.5, 0.530113501667277}, {1.8, 0.61262650375549}, {2.1, 0.699198351469569},
    {2.4, 0.791386611547074}, {2.7, 0.890977563036718}, {3, 1}, {3, 1}, {6, 1}};

// Delay CDF at λ = 1, Δd = 4; t ≥ Δd reads 1.
inline const std::vector<CurvePoint> kCdfDeltaD4{
    {0, 0.0780391288045684}, {0.4, 0.174578301791518}, {0.8, 0.264324914513543}, {1.2, 0.348814460442389},
    {1.6, 0.430052683734533}, {2, 0.510371487186262}, {2.4, 0.592371972769355}, {2.8, 0.678927918373731},
    {3.2, 0.773233467516934}, {3.6, 0.878885977680569}, {4, 1}, {4, 1}, {8, 1}};

// Expected delay vs λ at Δd = 1.5.
inline const std::vector<CurvePoint> kExpectedDelay{
    {0, 0}, {0.1, 0.0574373733355666}, {0.2, 0.116329882366903}, {0.3, 0.175265794269032},
    {0.4, 0.232903334103045}, {0.5, 0.288087748218657}, {0.6, 0.339925580618839}, {0.7, 0.387811987893813},
    {0.8, 0.431418104134563}, {0.9, 0.470651540469841}, {1, 0.505603944731428}, {1.1, 0.536496902971836},
    {1.2, 0.56363347738677}, {1.3, 0.587358921160895}, {1.4, 0.608031346714374}, {1.5, 0.626001470657415},
    {1.6, 0.641599804448573}, {1.7, 0.655129498817955}, {1.8, 0.666863213080389}, {1.9, 0.67704267794858},
    {2, 0.685879939578904}, {2.1, 0.693559557291352}, {2.2, 0.700241257192331}, {2.3, 0.706062717537616},
    {2.4, 0.71114228652526}, {2.5, 0.715581519384431}, {2.6, 0.719467478871268}, {2.7, 0.722874779797498},
    {2.8, 0.72586738038535}, {2.9, 0.728500135784418}, {3, 0.730820135366757}, {3.1, 0.732867847763079},
    {3.2, 0.734678097584656}, {3.3, 0.736280896424993}, {3.4, 0.737702148714174}, {3.5, 0.738964250718415},
    {3.6, 0.740086598682948}, {3.7, 0.741086019945682}, {3.8, 0.741977138871257}, {3.9, 0.742772687697456},
    {4, 0.743483770850551}};

// Ensemble estimates at selected loads.
inline const std::vector<CurvePoint> kEdsProbabilityZero{{1, 0.5448}, {2, 0.279}, {3, 0.1435}, {4, 0.0758}, {5, 0.0441}};
inline const std::vector<CurvePoint> kEdsProbabilityDeltaD{{1, 0.0991}, {2, 0.2633}, {3, 0.3627}, {4, 0.42}, {5, 0.4518}};
inline const std::vector<CurvePoint> kEdsExpectedDelay{{0.2, 0.116}, {0.4, 0.233}, {0.6, 0.339},
                                                       {0.8, 0.431}, {1.0, 0.505}, {1.2, 0.563}};

}  // namespace ixdelay::reference
