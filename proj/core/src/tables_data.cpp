#include "boysfn/tables.hpp"

namespace boysfn {

// Built-in coefficient set: k_max = 32, eps_tol = 5e-14. Denominators are
// monic; coefficients ascend in degree and carry 17+ significant digits so
// every double is reproduced exactly.
const CoefficientTableSet& embedded_default() {
  static const CoefficientTableSet set = [] {
    CoefficientTableSet s;
    s.x0 = 11.899848152108484;
    s.x1 = 28.989337738820740;
    s.k_max = 32;
    s.eps_tol = 5e-14;
    s.r_B = RationalApproximant{
      {
        5.74537531702047552E+07, 2.73330925890901898E+06, 7.52922255805293133E+04,
        2.33846894861346960E+05, 8.34841284469484906E+03, 3.90892739018191431E+01,
      },
      {
        4.79893571439451030E+07, 3.04808499107506708E+07, -1.66693114610725015E+06,
        5.63505368535215625E+05, 6.39702496081641495E+04, 8.53693546919731980E+02,
        1.00000000000000000E+00,
      }};
    s.r_A.resize(33);
    s.r_A[0] = RationalApproximant{
      {
        4.59649054199586751E+11, 7.24610171100856232E+10, 2.24977231104248461E+10,
        1.62899741137514774E+09, 1.91702978974343428E+08, 6.56389165108291995E+06,
        3.22527508970295511E+05,
      },
      {
        4.59649054199579770E+11, 2.25677368510488844E+11, 5.17586071870896154E+10,
        7.25815475661893057E+09, 6.80492889773299134E+08, 4.33436553747085297E+07,
        1.77090545597099048E+06, 3.59362735209789862E+04, -2.11809634725166180E+02,
        1.00000000000000000E+00,
      }};
    s.r_A[1] = RationalApproximant{
      {
        -4.65157653173317170E+11, 2.29425320006178902E+10, -1.29857712372204999E+10,
        1.78844602696723749E+08, -7.40895343861489278E+07, -8.83205562809530090E+04,
        -9.88905350089899030E+04,
      },
      {
        -1.39547295952001886E+12, -7.68456179705352370E+11, -2.01001101693493424E+11,
        -3.29212211155791438E+10, -3.73769996691396548E+09, -3.06209737336929359E+08,
        -1.81100571529961951E+07, -7.35772618617600437E+05, -1.73370711526267371E+04,
        -3.01644420112301709E+01, 1.00000000000000000E+00,
      }};
    s.r_A[2] = RationalApproximant{
      {
        -3.21534353039794617E+11, 3.54003705695069524E+10, -7.01635383055901375E+09,
        2.79078906677022317E+08, -2.78149387526899752E+07, 2.50304977467284799E+05,
        -2.61245797045770042E+04,
      },
      {
        -1.60767176519862195E+12, -9.71335122319310198E+11, -2.82317080188832696E+11,
        -5.22376678369643476E+10, -6.85230379697842854E+09, -6.69937093077230221E+08,
        -4.97459753170508105E+07, -2.78418670876310491E+06, -1.11322872042882201E+05,
        -2.82622020347674619E+03, 1.00000000000000000E+00,
      }};
    s.r_A[3] = RationalApproximant{
      {
        1.74242490762361812E+12, -2.31739940313066278E+11, 3.01841796858242589E+10,
        -1.26158491469042445E+09, 6.24293777436041829E+07,
      },
      {
        1.21969743533675925E+13, 7.86435602580557761E+12, 2.44715513739141483E+12,
        4.86816942362079024E+11, 6.90443144069857960E+10, 7.35560133650822347E+09,
        6.01952300371660024E+08, 3.77439507311669504E+07, 1.75556856301654242E+06,
        5.15451071696163987E+04, 7.51530879218449388E+02, -6.90725843407910436E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[4] = RationalApproximant{
      {
        1.07640450297782221E+08, -2.55458353459970974E+07, 3.52812080853076687E+06,
        -2.95422780643995305E+05, 1.70289049867735511E+04, -6.62342704137285632E+02,
        1.70870241353972667E+01, -2.64791558310288340E-01, 1.88027971847219425E-03,
      },
      {
        9.68764052679927282E+08, 5.62712615905041359E+08, 1.56812915525206930E+08,
        2.77339407473815158E+07, 3.46473761130405637E+06, 3.21197484344255914E+05,
        2.24921989775218534E+04, 1.17843724039343395E+03, 4.36972585953520361E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[5] = RationalApproximant{
      {
        -3.63350182727758466E+12, 5.09119767488377891E+11, -4.66070769596744520E+10,
        1.82540967399093927E+09, -5.30543200345946936E+07,
      },
      {
        -3.99685201000472987E+13, -2.82191995658341951E+13, -9.73533805198387887E+12,
        -2.18080501665434778E+12, -3.55350240246925148E+11, -4.46814329074875211E+10,
        -4.48324401716056338E+09, -3.65555177659264031E+08, -2.43548935295006352E+07,
        -1.31837759196109729E+06, -5.61522957956144616E+04, -1.72623902086203936E+03,
        -3.61093692542213220E+01, 1.00000000000000000E+00,
      }};
    s.r_A[6] = RationalApproximant{
      {
        6.32362964316323446E+07, -1.78304485335124420E+07, 2.51567753132107927E+06,
        -2.19143264882283100E+05, 1.27344879285248770E+04, -5.00986429135037998E+02,
        1.29601270953674587E+01, -2.00754947326145896E-01, 1.42097370844837178E-03,
      },
      {
        8.22071853610988647E+08, 4.80666442210646271E+08, 1.34959799873156815E+08,
        2.40771063816958245E+07, 3.03870085803678862E+06, 2.85166544683446997E+05,
        2.02723823300825666E+04, 1.08337493002115488E+03, 4.12117791883748035E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[7] = RationalApproximant{
      {
        1.75909119461509143E+11, -2.31397098271936913E+10, 1.68875828571559918E+09,
        -5.64452771442680053E+07, 1.17407664422063718E+06,
      },
      {
        2.63863679192234972E+12, 1.98111328666843863E+12, 7.31805354458430146E+11,
        1.76968955184222011E+11, 3.14408799088726826E+10, 4.36407011112015921E+09,
        4.91056122401636080E+08, 4.58523651661037259E+07, 3.59865965982106407E+06,
        2.40434947023941125E+05, 1.32823525115988495E+04, 6.68417454613384130E+02,
        2.04252475843400746E+01, 1.00000000000000000E+00,
      }};
    s.r_A[8] = RationalApproximant{
      {
        4.27633852210096255E+07, -1.31313288604750197E+07, 1.92047093279423654E+06,
        -1.71296882686810612E+05, 1.01020189016332066E+04, -4.01157829572622705E+02,
        1.04348508576747219E+01, -1.62054987695090529E-01, 1.14734845393421036E-03,
      },
      {
        7.26977548756867415E+08, 4.27221005649961331E+08, 1.20645561717991569E+08,
        2.16664004023517011E+07, 2.75570803292488760E+06, 2.61012457722551099E+05,
        1.87669023892614156E+04, 1.01792753889118730E+03, 3.94513904309799494E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[9] = RationalApproximant{
      {
        3.66090812345166521E+07, -1.15680315739775994E+07, 1.71937185342050874E+06,
        -1.55021217572956428E+05, 9.21144155752769637E+03, -3.67768247155539817E+02,
        9.60302999038807409E+00, -1.49531416596628179E-01, 1.06048517076778994E-03,
      },
      {
        6.95572543455501572E+08, 4.09534939434717099E+08, 1.15897974071192602E+08,
        2.08647896181599307E+07, 2.66133029522484206E+06, 2.52929651302264212E+05,
        1.82610915753483673E+04, 9.95830569569992250E+02, 3.88529933329081858E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[10] = RationalApproximant{
      {
        3.18727019529535358E+07, -1.03030212432610360E+07, 1.55322739375449943E+06,
        -1.41423769641528486E+05, 8.46337556751722184E+03, -3.39673496567585546E+02,
        8.90365945622176397E+00, -1.39028066499372714E-01, 9.87898143632479994E-04,
      },
      {
        6.69326741011720691E+08, 3.94760969620761552E+08, 1.11934472548745699E+08,
        2.01961126182670577E+07, 2.58269289943073100E+06, 2.46205845498650818E+05,
        1.78414280943905329E+04, 9.77560143690833819E+02, 3.83650317003543676E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[11] = RationalApproximant{
      {
        2.81728640639121210E+07, -9.27753783966489735E+06, 1.41622089785473823E+06,
        -1.30119646526112459E+05, 7.83983535586110006E+03, -3.16281224293270705E+02,
        8.32354807569940454E+00, -1.30365690643806388E-01, 9.28460701879997724E-04,
      },
      {
        6.47975873469703400E+08, 3.82754433300979251E+08, 1.08717435139479832E+08,
        1.96542366007654340E+07, 2.51910102226997192E+06, 2.40783937925615525E+05,
        1.75044646089453221E+04, 9.62973033666935387E+02, 3.79830794453759681E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[12] = RationalApproximant{
      {
        2.53544601714217041E+07, -8.48258198675025220E+06, 1.30979027926005474E+06,
        -1.21399979536359709E+05, 7.36540787890653295E+03, -2.98819753533120450E+02,
        7.90065371972972126E+00, -1.24223182966353277E-01, 8.87602463343472957E-04,
      },
      {
        6.33861504285287492E+08, 3.74844250615203673E+08, 1.06606600921230004E+08,
        1.93004584684968576E+07, 2.47784305031495735E+06, 2.37294882532379883E+05,
        1.72900919399835697E+04, 9.53839898338405204E+02, 3.77540526654878690E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[13] = RationalApproximant{
      {
        2.30819576500698694E+07, -7.82628187112665194E+06, 1.22075808419529548E+06,
        -1.14056644748954035E+05, 6.96500421338905853E+03, -2.84102269345918437E+02,
        7.54567809731318183E+00, -1.19100077239224798E-01, 8.53805650125360363E-04,
      },
      {
        6.23212856551669737E+08, 3.68923049044818432E+08, 1.05041400991127738E+08,
        1.90411719871711305E+07, 2.44805073752281911E+06, 2.34824627705903913E+05,
        1.71426120081067911E+04, 9.47807814143492262E+02, 3.76219983903593232E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[14] = RationalApproximant{
      {
        2.12458334186947741E+07, -7.28795130204511162E+06, 1.14728519794468474E+06,
        -1.08001312706828555E+05, 6.63702808514035845E+03, -2.72194232447144952E+02,
        7.26358339711147027E+00, -1.15125375121206069E-01, 8.28372975875056273E-04,
      },
      {
        6.16129169141965232E+08, 3.65028312420485399E+08, 1.04025946459673529E+08,
        1.88758341061380906E+07, 2.42947540498253127E+06, 2.33331119143442641E+05,
        1.70575049731055860E+04, 9.44573172805824440E+02, 3.75688900688652846E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[15] = RationalApproximant{
      {
        1.97951920905537712E+07, -6.86144392935271214E+06, 1.08945206014270508E+06,
        -1.03307183554948528E+05, 6.38895089014890834E+03, -2.63500160865368274E+02,
        7.06742762934637086E+00, -1.12538812296089342E-01, 8.13253423623244395E-04,
      },
      {
        6.13650954807010558E+08, 3.63755226051815399E+08, 1.03722759914749749E+08,
        1.88324083020775319E+07, 2.42547911704470786E+06, 2.33109185881384500E+05,
        1.70537146317930562E+04, 9.44992042708637598E+02, 3.76184079908039309E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[16] = RationalApproximant{
      {
        1.86192784303380985E+07, -6.51388986576138143E+06, 1.04240529459482231E+06,
        -9.95208121677860958E+04, 6.19202142390343984E+03, -2.56771026974047403E+02,
        6.92127832841267607E+00, -1.10719326466696887E-01, 8.03538741614490102E-04,
      },
      {
        6.14436188201034918E+08, 3.64367183315307283E+08, 1.03940248825357695E+08,
        1.88798090295968553E+07, 2.43258885879432064E+06, 2.33882192253606616E+05,
        1.71157875559842136E+04, 9.48495640903491750E+02, 3.77642691208863824E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[17] = RationalApproximant{
      {
        1.76287634789397660E+07, -6.21942096176012145E+06, 1.00259907210026151E+06,
        -9.63482365065391979E+04, 6.03043257975913718E+03, -2.51454186523567315E+02,
        6.81322696418388913E+00, -1.09530227762568917E-01, 7.98685174729464649E-04,
      },
      {
        6.17006721762789511E+08, 3.65975273419925384E+08, 1.04421803079143984E+08,
        1.89710288645764397E+07, 2.44473111450708740E+06, 2.35070543543347768E+05,
        1.72022767143530895E+04, 9.52970348100220882E+02, 3.79263609084777770E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[18] = RationalApproximant{
      {
        1.10053495649937993E+06, -4.15290284510376398E+05, 7.16040579546255159E+04,
        -7.36091152895557778E+03, 4.92944440283867767E+02, -2.19946789490235600E+01,
        6.37661526509535572E-01, -1.09650093594191108E-02, 8.54702189691105590E-05,
      },
      {
        4.07197933905399874E+07, 2.32658583260025049E+07, 6.34852227957287156E+06,
        1.09225406973565756E+06, 1.31450200622355534E+05, 1.15572307375223640E+04,
        7.47423567664348937E+02, 3.40341812575986739E+01, 1.00000000000000000E+00,
      }};
    s.r_A[19] = RationalApproximant{
      {
        1.05789196387343878E+06, -4.01973620618696332E+05, 6.97546013607269779E+04,
        -7.21444241392353212E+03, 4.85960478493897660E+02, -2.18064735206264471E+01,
        6.35745444451493209E-01, -1.09927619511029222E-02, 8.61606672959964407E-05,
      },
      {
        4.12577865911173575E+07, 2.35682404272109034E+07, 6.42907318962590525E+06,
        1.10563143724400098E+06, 1.32976727424942939E+05, 1.16807305638863958E+04,
        7.54304476480918715E+02, 3.42787973526879301E+01, 1.00000000000000000E+00,
      }};
    s.r_A[20] = RationalApproximant{
      {
        6.47075356638978264E+06, -2.11794040363122806E+06, 3.09732774375819352E+05,
        -2.62120805979412831E+04, 1.38502012427518084E+03, -4.56416106277303520E+01,
        8.67411673772646667E-01, -7.32312148535088359E-03,
      },
      {
        2.65300896221719669E+08, 1.66125763126255078E+08, 5.02387297315930431E+07,
        9.71995268750334966E+06, 1.34171144238381706E+06, 1.39219189884935085E+05,
        1.11001533818694266E+04, 6.80698925494075328E+02, 3.03328267496977109E+01,
        1.00000000000000000E+00,
      }};
    s.r_A[21] = RationalApproximant{
      {
        1.00113806692073362E+06, -3.85384394542953371E+05, 6.77086190185746604E+04,
        -7.08719057795389421E+03, 4.83026628802106735E+02, -2.19284174480561886E+01,
        6.46767482399436452E-01, -1.13143654935771093E-02, 8.97258365399553749E-05,
      },
      {
        4.30489368776244012E+07, 2.45641218262036544E+07, 6.69125494568673421E+06,
        1.14861041840245552E+06, 1.37810035550222365E+05, 1.20651381624713644E+04,
        7.75299072818440040E+02, 3.49985539072948972E+01, 1.00000000000000000E+00,
      }};
    s.r_A[22] = RationalApproximant{
      {
        9.78413399959775489E+05, -3.78882973996717940E+05, 6.69529564811272573E+04,
        -7.04831896020322737E+03, 4.83136707558805601E+02, -2.20607408482679038E+01,
        6.54514378702913320E-01, -1.15190214816880878E-02, 9.19134544479325137E-05,
      },
      {
        4.40286029982168180E+07, 2.51053115917952085E+07, 6.83266786797908781E+06,
        1.17158690304016054E+06, 1.40366065850910693E+05, 1.22656099930746168E+04,
        7.86052153038727682E+02, 3.53527986648245085E+01, 1.00000000000000000E+00,
      }};
    s.r_A[23] = RationalApproximant{
      {
        9.66613236589941587E+05, -3.76591537940241924E+05, 6.69490245054781034E+04,
        -7.09048327100888247E+03, 4.89000278904994944E+02, -2.24678080217337064E+01,
        6.70852908877587124E-01, -1.18840290427715872E-02, 9.54640048843181125E-05,
      },
      {
        4.54308221197475695E+07, 2.58767005646896380E+07, 7.03330268657338671E+06,
        1.20401692994392062E+06, 1.43952347762249175E+05, 1.25448930369473603E+04,
        8.00903396209939783E+02, 3.58343785730047088E+01, 1.00000000000000000E+00,
      }};
    s.r_A[24] = RationalApproximant{
      {
        9.46417970705439261E+05, -3.70615455935501387E+05, 6.62217473689567327E+04,
        -7.04931569194996637E+03, 4.88689126513939576E+02, -2.25733788136891364E+01,
        6.77724133763032956E-01, -1.20745042392986278E-02, 9.75714588013979498E-05,
      },
      {
        4.63744805645838129E+07, 2.63957161413426991E+07, 7.16819577499412023E+06,
        1.22578789705691770E+06, 1.46353578064983032E+05, 1.27310545374895777E+04,
        8.10731450762346773E+02, 3.61468162397566562E+01, 1.00000000000000000E+00,
      }};
    s.r_A[25] = RationalApproximant{
      {
        9.38339083663866324E+05, -3.69485294562541889E+05, 6.63890042488980107E+04,
        -7.10752303361419887E+03, 4.95630940996386078E+02, -2.30343254006395079E+01,
        6.95983183680208910E-01, -1.24825859151127786E-02, 1.01571653489208039E-04,
      },
      {
        4.78552932668707994E+07, 2.72056831197545568E+07, 7.37743864947674801E+06,
        1.25933265029253328E+06, 1.50025416335256253E+05, 1.30132038859781581E+04,
        8.25467951324447237E+02, 3.66070109940675643E+01, 1.00000000000000000E+00,
      }};
    s.r_A[26] = RationalApproximant{
      {
        4.10714903877451297E+05, -1.48284967299858010E+05, 2.39347004924575201E+04,
        -2.23771329927588588E+03, 1.30765178330923992E+02, -4.77083653277736153E+00,
        1.00472662976727574E-01, -9.40521491916329223E-04,
      },
      {
        2.17678899055620140E+07, 1.31172270011494235E+07, 3.78861677215369447E+06,
        6.92924225284179908E+05, 8.91172920829389735E+04, 8.42912591432377850E+03,
        5.91980063956890030E+02, 2.95952627591546617E+01, 1.00000000000000000E+00,
      }};
    s.r_A[27] = RationalApproximant{
      {
        4.08900785605349203E+05, -1.48431482634856935E+05, 2.40923408312081233E+04,
        -2.26555506669706903E+03, 1.33199027904202880E+02, -4.89079482854629149E+00,
        1.03694945043714753E-01, -9.77589742403062657E-04,
      },
      {
        2.24895432083406879E+07, 1.35367048804001308E+07, 3.90439736762716113E+06,
        7.12890261484845715E+05, 9.14892435859503544E+04, 8.62953599658876938E+03,
        6.03691417113411215E+02, 3.00346183030949037E+01, 1.00000000000000000E+00,
      }};
    s.r_A[28] = RationalApproximant{
      {
        4.04918508607377351E+05, -1.47688282537921989E+05, 2.40900411595833825E+04,
        -2.27701541273329491E+03, 1.34599432591312964E+02, -4.97062429847049156E+00,
        1.06031018404659362E-01, -1.00609923918133880E-03,
      },
      {
        2.30803549906603548E+07, 1.38797379677888631E+07, 3.99892622045677261E+06,
        7.29154678562026655E+05, 9.34152675146817121E+04, 8.79149602027818586E+03,
        6.13092658398733545E+02, 3.03809171630904679E+01, 1.00000000000000000E+00,
      }};
    s.r_A[29] = RationalApproximant{
      {
        4.02736747320286231E+05, -1.47596908552103088E+05, 2.41953671168406541E+04,
        -2.29898080725758501E+03, 1.36653819038177139E+02, -5.07636744387583698E+00,
        1.08970343078371462E-01, -1.04094686501161739E-03,
      },
      {
        2.37614680919304362E+07, 1.42741859569694491E+07, 4.10730483171108589E+06,
        7.47738452979963319E+05, 9.56069803134792050E+04, 8.97485315497558605E+03,
        6.23667277941326814E+02, 3.07651138887207658E+01, 1.00000000000000000E+00,
      }};
    s.r_A[30] = RationalApproximant{
      {
        3.97919751441660774E+05, -1.46422871477932610E+05, 2.41040387989907886E+04,
        -2.30043866634744442E+03, 1.37381681867259204E+02, -5.12892484415127183E+00,
        1.10687832961615384E-01, -1.06341785154454686E-03,
      },
      {
        2.42731048379708781E+07, 1.45707349185855753E+07, 4.18883065073214594E+06,
        7.61720137240172586E+05, 9.72552553702851800E+04, 9.11255555596752242E+03,
        6.31587400459517944E+02, 3.10500825233904551E+01, 1.00000000000000000E+00,
      }};
    s.r_A[31] = RationalApproximant{
      {
        3.91798219424327906E+05, -1.44678734533971131E+05, 2.39038910814725430E+04,
        -2.29005841777242621E+03, 1.37314139515175157E+02, -5.14842853033226852E+00,
        1.11618796618234802E-01, -1.07763143274847864E-03,
      },
      {
        2.46832878237592700E+07, 1.48090417666897102E+07, 4.25449476171968713E+06,
        7.73005948653021406E+05, 9.85883385117327141E+04, 9.22410511306109881E+03,
        6.38010373487974454E+02, 3.12807829393761209E+01, 1.00000000000000000E+00,
      }};
    s.r_A[32] = RationalApproximant{
      {
        3.83366575753585584E+05, -1.41962912506031840E+05, 2.35226110455187173E+04,
        -2.26023770325155337E+03, 1.35947943805136022E+02, -5.11394118864555818E+00,
        1.11257488030836662E-01, -1.07813149210223792E-03,
      },
      {
        2.49188274240078582E+07, 1.49473925142764407E+07, 4.29304258040583941E+06,
        7.79706453088844968E+05, 9.93889542962424737E+04, 9.29189196777588754E+03,
        6.41960930347546819E+02, 3.14246148951811622E+01, 1.00000000000000000E+00,
      }};
    validate_tables(s);
    return s;
  }();
  return set;
}

}  // namespace boysfn
