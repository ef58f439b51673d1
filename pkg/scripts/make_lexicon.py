#!/usr/bin/env python3
"""Regenerate src/thumbtype/data/lexicon.tsv.

The shipped lexicon is a curated stand-in for a large corpus-frequency word
list: words are ordered into frequency tiers and given Zipf-law counts
(count ~ D / rank^1.07). Every word used by the shipped phrase file is
included except a small exclusion list kept out on purpose so the
out-of-vocabulary phrase filter has something to do.

Deterministic: running it twice produces identical bytes.
"""

import os

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "src", "thumbtype", "data")

# Words deliberately left out of the lexicon (rare/proper-noun phrase words).
EXCLUDED = {
    "saturn", "overdrawn", "spaghetti", "psychology", "ides",
    "sam", "jedi", "subdivisions", "dow",
}

TIER1 = """
the of and to a in is was it for i with as be on by at have are this
not but had his they from she that which or we an were been their has
would there what will all if can her said who one so up out them then
when him more no could do into its time two my other about may after
also did many before must you me your how our like new now only over
such most even most good very make than first some these way because
them well down should each just those people too little state world
still own see men work long get here between both life being under
never day same another know while last might us great old year off
come since against go came right used take three
""".split()

TIER2 = """
states himself few house use during without again place american around
however home small found thought went say part once general high upon
school every does got united left number course war until always away
something fact though water less public put think almost hand enough far
took head yet government system better set told nothing night end why
called eyes find going look asked later knew point next program city
business give group toward young days let room within children side
social given order present several national second possible rather per
face among form important often things looked early white case become
large need big four felt along best ever least power development light
thing seemed family interest want members mind country area others
turned although open god done door face service certain kind began
different back help change problem line free hands action top means
whole today study book eye making moment reason question seen
themselves word whether five real am
""".split()

TIER3 = """
above across act actually add afraid afternoon age ago agree air
allowed alone already am amount animal animals answer answered anyone
anything appear apple april arm arms army art article able
attention august aunt autumn baby bad bag ball bank bar base basic
beach bear beat beautiful became bed bedroom been before began behind
believe bell belong below belt bench beside between beyond bill bird
birds birth birthday bit black block blood blue board boat body bone
book books born both bottle bottom bought box boy boys brain branch
bread break breakfast bridge brief bright bring broke broken brother
brought brown build building built bus bush busy buy cake call calm
camp can cap capital captain car card care career careful carried carry
cast cat catch cattle caught cause cell cent center central century
chair chance character charge check cheese chest chief child choice
choose chose church circle citizen claim class clean clear climb clock
close cloth clothes cloud club coast coat coffee cold collect college
color come comfort coming common company compare complete computer
concern condition consider contain continue control cook cool copy
corn corner correct cost cotton count county couple courage cover cow
crack cream create cried crop cross crowd cry cup current cut dance
danger dark date daughter dawn dead deal dear death december decide
decision deep degree delight demand describe desert design desk detail
device die died difference difficult dinner direct direction dirt
discover distance divide doctor dog dogs dollar dollars done door
double doubt dozen draw dream dress drink drive drop drove dry duck
due dust duty each eager ear early earn earth east easy eat edge
effect effort egg eight either electric element else empty energy
engine english enjoy enter entire equal escape especially europe
evening event exact example except exercise expect experience explain
express extra fair fall familiar famous farm farmer fast father fear
feature february feed feel feet fell fellow field fight figure fill
final finally fine finger finish fire firm fish fit flat floor flow
flower fly follow food foot force foreign forest forget form fortune
forward fourth frame france free fresh friend friends front fruit full
fun funny future game garden gas gate gather gave general gentle
gentleman girl girls glad glass gold gone grade grain grand grass gray
green grew ground grow growth guard guess guide gun hair half hall
hang happen happy hard hat hate head health hear heard heart heat
heavy held hello help herself hidden hide hill history hit hold hole
hollow hope horse hospital hot hotel hour hours human hundred hungry
hunt hurry hurt ice idea important inch include increase indeed
industry information inside instead interest iron island issue january
job join joy judge july jump june keep kept key kill kind king kitchen
knee knew knife knock known labor lady laid lake land language laugh
law lay lead leader learn least leave led leg length less lesson letter
level library lie lift lifted limit list listen live local lock log
london lonely longer loss lost lot loud love low lower luck lunch
machine made mail main major man manner map march mark market marry
mass master match material matter mean measure meat medicine meet
meeting member memory mention met method middle might mile milk mill
million mine minute mirror miss mistake mix model modern moment money
month moon morning mother motion mount mountain mouse mouth move
movement movie music name nation nature near nearly necessary neck
need neighbor nest news nice nine noise none noon north nose note
notice noun november object observe occur ocean october offer office
officer oil opinion opportunity orange order organize original outside
page paid pain paint pair pale paper paragraph park particular party
pass past path pattern pay peace pen pencil perfect perhaps period
person phrase pick picture piece pig place plain plan plane plant
play pleasant please pleasure plenty poem point pole police poor
popular position post pound pour practice prepare president press
pretty price print prize probable process produce product promise
proper protect proud prove provide pull purpose push quick quiet
quite race radio rain raise ran rate reach read ready record red
region remain remember repeat reply report represent require rest
result return rich ride ring rise river road rock roll roof root
rope rose rough row rule rush safe sail salt sand sat save saw scale
scene science score sea search season seat see seed seem sell send
sense sent sentence separate september serious serve settle seven
shake shall shape share sharp sheep sheet shine ship shirt shoe shop
shore short shot shoulder shout show sick sign signal silent silver
simple sing single sister sit six size skill skin sky sleep slow
small smell smile smoke snow soft soil sold soldier solution son song
soon sort sound south space speak special speed spell spend spoke
sport spot spread spring square stand star start station stay step
stick stock stone stood stop store storm story straight strange
stream street strength strike strong student students subject success
sudden suffer sugar suggest summer sun supply support suppose sure
surface surprise sweet swim table tail talk tall taste teach teacher
team tell temperature ten term test thank thick thin third thirty
thousand threw throw thus tie till tiny tire tired together tomorrow
tone tongue tonight took tool total touch town track trade train
travel tree trip trouble truck true trust try turn twelve twenty
type uncle understand unit usual valley value various verb view
village visit voice wait walk wall want warm wash watch wave weak
wear weather week weight welcome west wet wheel whose wide wife wild
win wind window winter wish woman women wonder wood word wore worth
wrote yard yellow yesterday yet
""".split()

# Everyday words thickening common prefixes (suggestion competition).
TIER4 = """
ability absence accept access accident account accuracy accurate ache
achieve acid acre adapt address adjust admire admit adopt advance
advantage adventure advice advise affair affect afford agency agent
agreement ahead aim alarm alive allow ally amaze ambition amuse
analysis ancient anger angle angry ankle announce annoy annual anxious
apart apology apparent appeal appearance appetite applaud
application apply appoint approach approve area argue argument arise
arrange arrest arrive arrow ash aside asleep aspect assist assume
assure astonish attach attack attempt attend attitude attract audience
author automatic autumn available average avoid awake award aware
awful awkward bachelor backward bacon badge baggage bake balance
balloon banana band bargain bark barn barrel basis basket bath bathe
battery battle bay beam bean beard beast beauty beg begin behave
being belief bend benefit berry bet betray bicycle bind biscuit bite
bitter blade blame blanket bleed bless blind blow blush boast boil
bold bomb bond border borrow boss bother bounce bound bow bowl brake
brass brave breast breath breed brick bride brief brilliant broad
broadcast bronze broom brush bubble bucket buckle bud budget bug
bundle burn burst bury bushel butter button cabbage cabin cage
calculate calendar camera canal candle candy cannon canoe canvas
capable cape captive capture carbon cargo carpet carriage cart carve
castle casual cave cease ceiling celebrate cellar cement ceremony
certainty chain chalk challenge champion channel chapter charm chart
chase cheap cheat cheer chemical cherry chicken childhood chimney
chin china chip chocolate choke chop chorus cigarette cinema circular
circumstance circus cite civil civilize clap clay clerk clever cliff
climate cling clip cloak closet clue coach coal coarse coin collar
combine comfort command comment commerce commission commit committee
communicate community companion competition complain complaint
component compose compound conceal concentrate concept concert
conclude concrete condemn conduct confess confidence confirm conflict
confuse congress connect conquer conscience conscious consent
consequence constant construct consult consume contact content contest
context contract contrast contribute convenient conversation convert
convince cope copper cord core cork correspond corridor cottage
cough council counsel counter courageous court cousin crash crawl
crazy credit creep crew cricket crime critic crown cruel crush
crystal cultivate culture cunning cupboard cure curious curl curse
curtain curve cushion custom customer cycle daily dairy dam damage
damp dare dash deaf debate debt decay deceive declare decrease deed
deer defeat defend define definite delay delicate deliver democracy
demonstrate dentist deny depart depend deposit depth deserve desire
despair destroy destruction develop devil devote diagram diamond
diary dictionary diet dig digital dignity dim dine dip diploma
disagree disappear disappoint disaster discipline discount discuss
disease disgust dish dismiss display dispute dissolve distant
distinct distribute district disturb ditch dive divine division
divorce dizzy dock document dodge domestic donate donkey dose dot
dough downstairs downtown drag drain drama drawer dread drift drill
drown drug drum dull dumb dump durable dusk dye dying eagle earnest
earthquake ease echo economy edit education effective efficient
elastic elbow elder election electricity elegant element elephant
elevator eleven eliminate elsewhere embarrass emerge emergency
emotion emphasis empire employ enable enclose encounter encourage
enemy engage engineer entertain enthusiasm entrance envelope envy
episode era errand error erupt essay essence establish estate esteem
estimate eternal evaluate evident evil exam examine exceed excellent
exchange excite exclaim excuse execute exhaust exhibit exist exit
expand expense experiment expert explode explore export expose
extend extent external extreme fabric fade fail faint faith fake
fame fan fancy fantastic fare fashion fasten fat fatal fate fault
favor feast feather fee feeble fence fertile festival fever fiber
fiction fierce fifteen fifty fifth film filter fin finance fist fix
flag flame flash flavor flee flesh flight float flock flood flour
flourish fluid flush foam fold folk fond fool forbid forecast forehead
forever forgive fork formal former formula fort forth fortunate forty
found foundation fountain fowl fox fraction fragrant frail freeze
frequent friction fright frog frost frown fry fuel fulfill function
fund funeral fur furnish furniture gain gallery gallon gamble gang
gap garage garbage garlic garment gaze gear generous genius gentle
genuine geography germ gesture ghost giant gift gifted glance glare
glide glimpse globe gloom glory glove glow glue goal goat golden
golf goods goose gossip govern gown grab grace gradual graduate
grammar grant grape graph grasp grateful grave gravity grease greet
grief grim grin grind grip groan grocery gross guarantee guest guilt
guitar gulf habit hail hammer handle handsome harbor harden hardly
harm harsh harvest haste hasten hatch haul hay hazard heal heap
heaven hedge heel height heir helicopter helmet hen herd hesitate
highway hint hip hire hobby hockey hoist holiday hollow holy honest
honey honor hook hop horizon horn horror hose host hunger hut ideal
identify idle ignorant ignore ill illegal illustrate image imagine
imitate immediate immense import impose impress improve impulse
incident income indicate indoor infant infect inform inherit initial
injure ink inn innocent inquire insect insert insist inspect inspire
install instance instant institute instruct instrument insult insure
intend intense interfere interior internal interrupt interval
interview introduce invade invent invest invite involve inward irate
item ivory jacket jail jam jar jaw jazz jealous jelly jewel
journey judgment juice jungle junior jury justice keen kettle
keyboard kick kidney kingdom kiss kit kite kitten knot lab label
lace lack ladder lag lamb lame lamp lane lantern lap large laser
late latter laughter laundry lawn lawyer layer lazy leaf leak lean
leap leather lecture legal leisure lemon lend lens leopard lessen
liberal liberty license lid likely limb lime limp linen link lion
lip liquid liquor literary litter lively liver load loaf loan lobby
locate lodge loose lord lorry lose lot lotion lottery lump lung
luxury mad magazine magic magnet maid major makeup male mood manage
mankind manual manufacture marble margin marine maroon marvel
mask mat mate mathematics mature maximum mayor meadow meal meanwhile
mechanic medal media melt menace mend mental menu merchant mercy
mere merit merry mess message metal meter midnight mild military
mineral minimum minister minor miracle mischief miserable misery
mislead mist mixture moan mob mobile mock mode moderate modest
moist monitor monkey monster monthly monument moral moreover
mosquito moss motel motive motor mud mug multiply murder muscle
museum mushroom mutter mutual mystery nail naked narrow nasty
naval navy neat needle neglect nephew nerve net network neutral
nevertheless niece nightmare noble nod normal notebook novel
nowhere nuisance numerous nurse nut oak oar oath obey
obtain occasion odd odor offend offense official onion onward
opera operate oppose orbit orchard orchestra organ origin ornament
orphan otherwise ought ounce oven overcome overflow overhead
overlook overnight overseas owe owl own owner ox oxygen pace pack
package pad pale palm pan pane panel panic pant parade parcel
pardon parent parrot part partner passage passenger passion
passive pasture pat patch patent patience patrol pause pave paw
peak peanut pear pearl peasant pebble peculiar pedal peel peep
penalty penny pension pepper perceive perform perfume permanent
permit persist personal persuade pet petrol philosophy photo
physical piano pie pile pilot pin pinch pine pink pint pioneer
pipe pirate pit pitch pity plastic plate platform plead plot
plough plug plum plunge pocket poet poison polish polite political
pond pony pool pop porch pork port porter portion portrait possess
postpone pot potato poverty powder powerful praise pray preach
precious precise predict prefer pregnant prejudice preserve pretend
prevail prevent previous prey pride priest primary prime primitive
principal principle prison private privilege procedure proceed
proclaim profession professor profit progress prohibit project
prominent prompt pronounce proof property proportion proposal
propose prospect prosper protest protein pub publish pump punch
punctual punish pupil puppy purchase pure purple pursue puzzle
qualify quality quantity quarrel quart queen quench quest quit
quote rabbit rack rag rage raid rail railroad rake rally ranch
random range rank rapid rare rat rattle raw ray razor react
rebel recall receipt receive recent recite reckon recognize
recommend recover recruit reduce reef refer reflect reform refresh
refuge refuse regard regiment register regret regular regulate
rehearse reign reject rejoice relate relation relax release
reliable relief relieve religion rely remark remedy remind remote
remove render renew rent repair replace represent reproduce
reputation request rescue resemble reserve reside resign resist
resolve resort resource respect respond responsible restaurant
restore restrict retain retire retreat reveal revenge revenue
reverse review revive revolt reward rhythm rib ribbon rid riddle
rifle rim riot rip ripe risk rival roar roast rob robe rocket
rod rogue romance rot rotten route routine royal rub rubber
rubbish rude rug ruin rumor rural rust sack sacred sacrifice
sad saddle safety sake salad salary sale salmon salute sample
sanction satisfy sauce saucer sausage scan scar scarce scare
scarf scatter scent schedule scheme scholar scissors scold scoop
scope scorn scout scrap scrape scratch scream screen screw script
scrub seal seal seize seldom select selfish senate senior
sensible sensitive sergeant series sermon servant session settle
severe sew shade shadow shaft shallow shame shave shed shell
shelter shepherd shield shift shilling shiver shock shoot
shortage shorthand shovel shower shrink shrug shut shy sigh
sight silence silk sin sincere sink sip sir site situation
sixteen sixty sketch ski skirt slam slap slave sleeve slender
slice slide slight slip slope slot smart smash smooth snack
snake snap sneeze sniff soak soap sob sober soccer society sock
sofa solar sole solemn solid solve somehow somewhat sore sorrow
sorry soul soup sour source sow spare spark sparrow spear
species specific specimen speech sphere spice spill spin spirit
spit spite splash splendid split spoil sponge spoon spray sprinkle
spy squeeze stab stable stadium staff stage stain stair stake
stale stall stamp standard staple stare startle starve statement
statue status steady steak steal steam steel steep steer stem
stiff stimulate sting stir stitch stomach stoop storage stove
strap straw strawberry stray stretch strict stride string strip
stripe stroke stroll structure struggle stubborn studio stuff
stumble stupid sturdy style submit substance substitute subtle
suburb succeed suck sue suit sum summary summit summon supper
supreme surgeon surplus surrender surround survey survive suspect
suspend swallow swamp swan sway swear sweat sweep swell swift
swing switch sword syllable symbol sympathy symptom syrup
tablet tackle tact tag tailor tame tan tank tap tar target task
tax taxi tea tear tease technical technique tedious telegraph
telephone telescope television temper temple tempt tend tender
tennis tense tent terminal terrible territory terror text texture
theater theme theory thermometer thief thigh thirst thorn
thread threat thrill throat throne thrust thumb thunder ticket
tickle tide tidy tight timber tin tip tissue title toad toast
tobacco toe toll tomato tomb tone tons tooth topic torch torture
toss tough tour tourist tow towel tower toy trace tradition
traffic tragedy trail trailer transfer transform translate
transparent transport trap tray treason treasure treat treaty
tremble tremendous trench trend trial triangle tribe trick
trifle trim triumph troop trophy tropical trot trunk truth tub
tube tuck tug tulip tumble tune tunnel turkey turnip tutor twig
twin twist typical ugly umbrella unable undergo underline
undertake undo uneasy unfair unfold uniform union unique
universe university unjust unkind unknown unless unlike unlikely
unload unlock unlucky unpleasant unrest unroll unsafe unsettled
untidy unusual unwilling upward urge urgent usage useful usher
utmost utter vacant vacation vague vain van vanish vanity vapor
variety vast vegetable vehicle veil vein velvet venture verse
version vessel veteran vice victim victory video vigorous violent
violet violin virtue visible vision visitor vital vivid vocabulary
volcano volume voluntary volunteer vote vowel voyage vulgar wade
wag wage wagon waist wake wander wanting ward wardrobe warehouse
warn warrant wax weaken wealth weapon weary weave web wedding
wedge weed weekly weep weigh welfare whale wheat whichever whip
whisper whistle wholly wicked widow width willing wine wing wink
wipe wire wisdom wise wit witch withdraw withhold witness wolf
wool worm worry worse worship wound wrap wreck wrist wrong
yield youth zeal zebra zero zone
""".split()


def main() -> None:
    # Order matters: earlier rank = larger count. Dedup keeps the first slot.
    ordered: list[str] = []
    seen: set[str] = set()
    for tier in (TIER1, TIER2, TIER3, TIER4):
        for word in tier:
            if not all("a" <= c <= "z" for c in word):
                continue
            if word in seen or word in EXCLUDED:
                continue
            seen.add(word)
            ordered.append(word)

    # Guarantee coverage of the shipped phrase vocabulary.
    with open(os.path.join(DATA, "phrases.txt"), encoding="utf-8") as fh:
        phrase_words = sorted({w for line in fh for w in line.split()})
    for word in phrase_words:
        if word not in seen and word not in EXCLUDED:
            seen.add(word)
            ordered.append(word)

    base = 56_000_000
    rows = []
    for rank, word in enumerate(ordered, start=1):
        count = max(60, int(base / rank**1.07))
        rows.append(f"{word}\t{count}")

    out = os.path.join(DATA, "lexicon.tsv")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(rows) + "\n")
    print(f"wrote {len(rows)} entries to {out}")
    print(f"excluded on purpose: {', '.join(sorted(EXCLUDED))}")


if __name__ == "__main__":
    main()
